"""
Unit tests for the ACM test and regularity by Artinian reduction.
"""

import pytest

from src.acm.reduction import acm_check, artinian_reduce, regularity_acm
from src.algebra.coordinates import random_linear_forms
from src.algebra.ring import Ring
from src.bounds.corpus import corpus
from src.constants import AcmOutcome
from src.errors import PreconditionError
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal


class TestAcmCheck:
    """Tests for the regular-sequence test."""

    def test_twisted_cubic(self, twisted_cubic: Ideal):
        """The twisted cubic is ACM on the first draw."""
        result = acm_check(twisted_cubic, seed=0)
        assert result.is_acm
        assert result.seed is not None
        assert len(result.forms) == 2
        assert result.witness is None

    @pytest.mark.parametrize("degrees", [(2, 2), (2, 3), (3, 3)])
    def test_complete_intersections(self, degrees: tuple[int, int]):
        """Complete intersections are ACM."""
        instance = corpus("complete_intersection", degrees=degrees)
        assert acm_check(instance.ideal, seed=0).is_acm

    def test_rational_quartic(self):
        """The rational quartic fails on every draw with a zerodivisor."""
        ideal = corpus("rational_curve", d=4).ideal
        result = acm_check(ideal, seed=0, budget=5)
        assert not result.is_acm
        assert len(result.draws) == 5
        assert all(d.outcome == AcmOutcome.ZERODIVISOR for d in result.draws)

        witness = result.witness
        assert witness is not None
        last = result.draws[-1]
        partial = result.ideal + list(last.forms[: witness.step])
        assert partial.contains(witness.element * witness.form)
        assert not partial.contains(witness.element)

    def test_hypersurface(self, p2: Ring):
        """Hypersurfaces are ACM."""
        t0, t1, t2 = p2.gens
        assert acm_check(Ideal(p2, [t0**3 + t1**3 + t2**3]), seed=3).is_acm

    def test_empty_scheme(self, p2: Ring):
        """The unit ideal is rejected."""
        with pytest.raises(PreconditionError):
            acm_check(Ideal.unit(p2), seed=0)

    def test_inhomogeneous(self, p2: Ring):
        """Inhomogeneous ideals are rejected."""
        t0, t1, _ = p2.gens
        with pytest.raises(PreconditionError):
            acm_check(Ideal(p2, [t0**2 + t1]), seed=0)


class TestArtinianReduction:
    """Tests for the Artinian basis."""

    def test_twisted_cubic(self, twisted_cubic: Ideal):
        """Basis of length 3 in degrees 0, 1, 1."""
        reduction = artinian_reduce(twisted_cubic, seed=0)
        assert reduction.multiplicity == 3
        assert reduction.degrees == (0, 1, 1)
        assert reduction.regularity == 2
        assert reduction.basis[0] == (0, 0, 0, 0)

    def test_two_points(self, two_points: Ideal):
        """Two points reduce to a basis 1, t in degrees 0, 1."""
        reduction = artinian_reduce(two_points, seed=0)
        assert reduction.degrees == (0, 1)
        assert len(reduction.basis_polynomials()) == 2


class TestRegularity:
    """Tests for regularity_acm."""

    @pytest.mark.parametrize(("degrees", "expected"), [((2, 2), 3), ((2, 3), 4), ((3, 3), 5)])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_complete_intersections(self, degrees: tuple[int, int], expected: int, seed: int):
        """reg = sum(d_i) - n + 2 for complete intersections in P^3."""
        instance = corpus("complete_intersection", degrees=degrees)
        assert regularity_acm(instance.ideal, seed) == expected

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_ccf(self, d: int):
        """The CCF curve has regularity d."""
        assert regularity_acm(corpus("ccf", d=d).ideal, 0) == d

    def test_twisted_cubic(self, twisted_cubic: Ideal):
        """The twisted cubic is 2-regular."""
        assert regularity_acm(twisted_cubic, 0) == 2

    def test_not_acm(self):
        """Regularity is not computed for non-ACM ideals."""
        with pytest.raises(PreconditionError):
            regularity_acm(corpus("rational_curve", d=4).ideal, 0)


class TestHyperplaneSection:
    """Cutting an ACM curve by a generic hyperplane."""

    @pytest.mark.parametrize("seed", [0, 1, 2])
    @pytest.mark.parametrize(
        ("family", "params", "degree"),
        [
            ("twisted_cubic", {}, 3),
            ("complete_intersection", {"degrees": (2, 2)}, 4),
            ("complete_intersection", {"degrees": (2, 3)}, 6),
        ],
    )
    def test_drops_dimension_keeps_degree(self, family: str, params: dict, degree: int, seed: int):
        """I + (l) has cone dimension one less and the same degree."""
        ideal = corpus(family, **params).ideal
        [form] = random_linear_forms(ideal.ring, seed, 1)
        before = hilbert_data(ideal)
        after = hilbert_data(ideal + Ideal(ideal.ring, [form]))
        assert (before.cone_dimension, before.degree) == (2, degree)
        assert after.cone_dimension == before.cone_dimension - 1
        assert after.degree == degree
