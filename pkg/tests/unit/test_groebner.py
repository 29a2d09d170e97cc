"""
Unit tests for Groebner bases, ideal operations and Hilbert data.
"""

import numpy as np
import pytest
import sympy

from src.algebra import linalg
from src.algebra.coordinates import CoordinateChange
from src.algebra.polynomial import involves_only, monomials_of_degree
from src.algebra.ring import MonomialOrder, Polynomial, Ring
from src.constants import Saturation
from src.errors import PreconditionError
from src.groebner.basis import buchberger, divide
from src.groebner.hilbert import (
    graded_piece_basis,
    hilbert_data,
    hilbert_function,
    standard_monomials,
)
from src.groebner.ideal import Ideal, ideal_membership
from src.groebner.operations import (
    elimination_ideal,
    ideal_quotient,
    intersect,
    saturate_irrelevant,
    saturation_wrt,
)

# Degree caps keep random ideals small enough for exact completion
_DEGREE_CAP = {2: 4, 3: 3, 4: 2}

PROPERTY_SEEDS = range(200)


def _random_form(rng: np.random.Generator, ring: Ring, d: int) -> Polynomial:
    monomials = list(monomials_of_degree(ring.nvars, d))
    picks = rng.choice(len(monomials), size=min(3, len(monomials)), replace=False)
    terms = {monomials[int(k)]: int(rng.integers(-3, 4)) for k in picks}
    terms[(0,) * (ring.nvars - 1) + (d,)] = 1
    return ring.from_terms(terms)


def _random_ideal(seed: int) -> tuple[Ring, Ideal, np.random.Generator]:
    rng = np.random.default_rng(seed)
    nvars = int(rng.integers(2, 5))
    ring = Ring(nvars, 7 if seed % 3 == 0 else 0)
    cap = _DEGREE_CAP[nvars]
    generators = [_random_form(rng, ring, int(rng.integers(1, cap + 1))) for _ in range(2)]
    return ring, Ideal(ring, generators), rng


def _coefficients(f: Polynomial, basis: list[tuple[int, ...]], ring: Ring) -> list:
    terms = dict(f.iterterms())
    return [terms.get(m, ring.domain.zero) for m in basis]


def _graded_multiples(ideal: Ideal, d: int) -> list[Polynomial]:
    ring = ideal.ring
    out = []
    for g in ideal.generators:
        dg = sum(g.LM)
        out.extend(ring.monomial(m) * g for m in monomials_of_degree(ring.nvars, d - dg))
    return out


def _in_span(f: Polynomial, spanning: list[Polynomial], d: int, ring: Ring) -> bool:
    basis = list(monomials_of_degree(ring.nvars, d))
    rows = [_coefficients(g, basis, ring) for g in spanning]
    base = linalg.rank(rows, len(basis), ring.domain)
    return linalg.rank(rows + [_coefficients(f, basis, ring)], len(basis), ring.domain) == base


class TestGroebnerBasis:
    """Tests for Buchberger completion."""

    def test_twisted_cubic_basis(self, twisted_cubic: Ideal):
        """The three quadrics already form a Groebner basis."""
        basis = twisted_cubic.groebner()
        assert len(basis.elements) == 3
        assert all(g.LC == 1 for g in basis.elements)

    def test_transform_records(self, twisted_cubic: Ideal):
        """Each basis element is reproduced from the generators."""
        basis = twisted_cubic.groebner(MonomialOrder.lex(), with_transform=True)
        assert basis.verify_transform()

    def test_tracked_basis_serves_plain_requests(self, twisted_cubic: Ideal):
        """A tracked basis is reused for untracked requests."""
        tracked = twisted_cubic.groebner(with_transform=True)
        assert twisted_cubic.groebner() is tracked

    def test_unit_ideal(self, p2: Ring):
        """t0 and t0 - 1 generate the whole ring."""
        t0 = p2.gens[0]
        assert Ideal(p2, [t0 - 1, t0]).is_unit

    def test_division_of_zero(self, p2: Ring):
        """Dividing zero gives zero quotients."""
        quotients, remainder = divide(p2.zero, list(p2.gens))
        assert quotients == [p2.zero] * 3
        assert remainder == p2.zero

    def test_membership_witness(self, twisted_cubic: Ideal, p3: Ring):
        """Members come with cofactors over the generators."""
        t0, t1, t2, t3 = p3.gens
        f = t0 * (t1 * t2 - t0 * t3) + t3**2 * (t2**2 - t1 * t3)
        member, witness = ideal_membership(f, twisted_cubic)
        assert member
        assert witness.verify(f, twisted_cubic.generators)

    def test_non_membership_witness(self, twisted_cubic: Ideal, p3: Ring):
        """Non-members still satisfy the witness identity."""
        t0, t1, *_ = p3.gens
        member, witness = ideal_membership(t0 * t1, twisted_cubic)
        assert not member
        assert witness.remainder
        assert witness.verify(t0 * t1, twisted_cubic.generators)

    def test_equality_ignores_generating_set(self, twisted_cubic: Ideal):
        """Ideals compare by reduced basis."""
        t0, t1, t2, t3 = twisted_cubic.ring.gens
        other = Ideal(
            twisted_cubic.ring,
            [t1 * t2 - t0 * t3 + (t1**2 - t0 * t2), t1**2 - t0 * t2, t2**2 - t1 * t3],
        )
        assert other == twisted_cubic


class TestOperations:
    """Tests for elimination, intersection, quotients and saturation."""

    def test_intersection_of_coordinate_hyperplanes(self, p2: Ring):
        """(t0) and (t1) meet in (t0 t1)."""
        t0, t1, _ = p2.gens
        assert intersect(Ideal(p2, [t0]), Ideal(p2, [t1])) == Ideal(p2, [t0 * t1])

    def test_quotient(self, p2: Ring):
        """(t0^2 t1) : t0 = (t0 t1)."""
        t0, t1, _ = p2.gens
        assert ideal_quotient(Ideal(p2, [t0**2 * t1]), t0) == Ideal(p2, [t0 * t1])

    def test_quotient_by_zero(self, p2: Ring):
        """The zero polynomial is rejected."""
        with pytest.raises(PreconditionError):
            ideal_quotient(Ideal(p2, [p2.gens[0]]), p2.zero)

    def test_saturation_wrt_variable(self, p2: Ring):
        """(t0^3 t1) saturated by t0 is (t1)."""
        t0, t1, _ = p2.gens
        assert saturation_wrt(Ideal(p2, [t0**3 * t1]), t0) == Ideal(p2, [t1])

    def test_irrelevant_saturation(self, p2: Ring):
        """(t0^2, t0 t1, t0 t2) saturates to (t0)."""
        t0, t1, t2 = p2.gens
        saturated = saturate_irrelevant(Ideal(p2, [t0**2, t0 * t1, t0 * t2]))
        assert saturated == Ideal(p2, [t0])
        assert saturated.saturated == Saturation.YES

    def test_empty_scheme_saturates_to_unit(self, p2: Ring):
        """An m-primary ideal saturates to the unit ideal."""
        assert saturate_irrelevant(Ideal(p2, [g**2 for g in p2.gens])).is_unit

    def test_elimination(self, p2: Ring):
        """Eliminating t2 from (t0 - t2, t1 - t2) gives (t0 - t1)."""
        t0, t1, t2 = p2.gens
        eliminated = elimination_ideal(Ideal(p2, [t0 - t2, t1 - t2]), 2)
        assert eliminated == Ideal(p2, [t0 - t1])

    def test_elimination_range(self, p2: Ring):
        """keep must lie in 0..nvars."""
        with pytest.raises(PreconditionError):
            elimination_ideal(Ideal(p2, [p2.gens[0]]), 4)


class TestHilbert:
    """Tests for Hilbert data."""

    def test_twisted_cubic(self, twisted_cubic: Ideal):
        """A curve of degree three with Hilbert function 3d + 1."""
        data = hilbert_data(twisted_cubic)
        assert (data.dimension, data.degree) == (1, 3)
        assert data.numerator == (1, 0, -3, 2)
        assert hilbert_function(twisted_cubic, 2) == 7

    def test_two_points(self, two_points: Ideal):
        """Two reduced points."""
        data = hilbert_data(two_points)
        assert (data.dimension, data.degree) == (0, 2)

    def test_unit_ideal_is_empty(self, p2: Ring):
        """The unit ideal has empty scheme."""
        assert hilbert_data(Ideal.unit(p2)).is_empty

    def test_artinian_standard_monomials(self, p2: Ring):
        """(t0^2, t1^2, t2) has the standard monomials 1, t0, t1, t0 t1."""
        t0, t1, t2 = p2.gens
        ideal = Ideal(p2, [t0**2, t1**2, t2])
        data = hilbert_data(ideal)
        assert data.is_empty and data.degree == 4
        assert len(standard_monomials(ideal)) == 4
        assert graded_piece_basis(ideal, 2) == [(1, 1, 0)]

    def test_standard_monomials_need_artinian(self, twisted_cubic: Ideal):
        """A curve has infinitely many standard monomials."""
        with pytest.raises(PreconditionError):
            standard_monomials(twisted_cubic)

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS)
    def test_degree_survives_coordinate_change(self, seed: int):
        """Dimension and degree do not depend on the coordinates."""
        ring, ideal, _ = _random_ideal(seed)
        moved = ideal.transformed(CoordinateChange.random(ring, seed))
        before, after = hilbert_data(ideal), hilbert_data(moved)
        assert (after.dimension, after.degree) == (before.dimension, before.degree)


class TestGroebnerProperties:
    """Seeded random ideals checked against independent computations."""

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS)
    def test_normal_form_is_idempotent(self, seed: int):
        """Reducing a remainder again changes nothing."""
        ring, ideal, rng = _random_ideal(seed)
        basis = ideal.groebner()
        f = _random_form(rng, ring, int(rng.integers(1, 4)))
        r = basis.remainder(f)
        assert basis.remainder(r) == r

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS)
    def test_membership_agrees_with_linear_algebra(self, seed: int):
        """Membership in a graded piece matches a rank computation."""
        ring, ideal, rng = _random_ideal(seed)
        d = max(ideal.generator_degrees) + 1
        multiples = _graded_multiples(ideal, d)
        member = ring.zero
        for g in multiples:
            member += g * int(rng.integers(-2, 3))
        assert ideal.contains(member)
        candidate = _random_form(rng, ring, d)
        assert ideal.contains(candidate) == _in_span(candidate, multiples, d, ring)

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS)
    def test_quotient_containments(self, seed: int):
        """I is inside (I : f), and (I : f) f is inside I."""
        ring, ideal, _ = _random_ideal(seed)
        f = ring.gens[0]
        quotient = ideal_quotient(ideal, f)
        assert quotient.contains_ideal(ideal)
        assert all(ideal.contains(g * f) for g in quotient.generators)

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS[::4])
    def test_saturation_contains_ideal(self, seed: int):
        """I is inside its saturation."""
        _, ideal, _ = _random_ideal(seed)
        assert saturate_irrelevant(ideal).contains_ideal(ideal)

    @pytest.mark.parametrize("seed", PROPERTY_SEEDS[::8])
    def test_saturation_is_idempotent_and_keeps_the_scheme(self, seed: int):
        """Saturating again changes nothing, and I m has the scheme of I."""
        ring, ideal, _ = _random_ideal(seed)
        padded = Ideal(ring, [g * t for g in ideal.generators for t in ring.gens])
        saturated = saturate_irrelevant(padded)
        assert saturate_irrelevant(saturated.marked(Saturation.UNKNOWN)) == saturated
        assert saturated == saturate_irrelevant(ideal)

        before, after = hilbert_data(padded), hilbert_data(saturated)
        assert before.dimension == after.dimension
        if not before.is_empty:
            assert before.degree == after.degree

    @pytest.mark.parametrize("seed", [s for s in PROPERTY_SEEDS if s % 3])
    def test_resultant_lies_in_elimination_ideal(self, seed: int):
        """Res(f, g) with respect to the last variable is eliminated."""
        ring, ideal, _ = _random_ideal(seed)
        f, g = ideal.generators
        last = ring.backend.symbols[-1]
        resultant = ring.backend.from_expr(sympy.expand(sympy.resultant(f.as_expr(), g.as_expr(), last)))
        eliminated = elimination_ideal(ideal, ring.nvars - 1)
        assert all(involves_only(h, ring.nvars - 1) for h in eliminated.generators)
        assert eliminated.contains(resultant)


class TestBuchbergerCharacteristic:
    """Completion over a prime field."""

    def test_frobenius_like_basis(self):
        """(t0^3 + t1^3) in characteristic 3 stays a single generator."""
        ring = Ring.projective(1, 3)
        t0, t1 = ring.gens
        basis = buchberger([t0**3 + t1**3, t0 * (t0**3 + t1**3)], ring, with_transform=True)
        assert len(basis.elements) == 1
        assert basis.verify_transform()
