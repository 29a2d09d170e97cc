"""
Unit tests for rings, scalars, polynomials and coordinate changes.
"""

from fractions import Fraction

import pytest

from src.algebra import linalg
from src.algebra.coordinates import (
    CoordinateChange,
    apply_linear_change,
    random_coefficient_rows,
    random_linear_forms,
)
from src.algebra.genericity import with_redraws
from src.algebra.polynomial import (
    degree,
    degree_and_homogeneity,
    euler_pairing,
    homogeneous_degree,
    involves_only,
    monomials_of_degree,
    partial_derivative,
    poly_arith,
    proportional,
)
from src.algebra.ring import MonomialOrder, Ring
from src.algebra.scalars import field_for, scalar, scalar_to_str
from src.errors import (
    GenericityError,
    NotHomogeneousError,
    PreconditionError,
    RedrawsExhaustedError,
    RingMismatchError,
    SingularMatrixError,
)


class TestScalars:
    """Tests for coefficient fields."""

    def test_rejects_composite_characteristic(self):
        """Characteristic must be zero or prime."""
        with pytest.raises(PreconditionError):
            field_for(4)

    def test_fraction_in_characteristic_p(self):
        """1/2 is 3 in GF(5)."""
        gf5 = field_for(5)
        assert scalar_to_str(gf5, scalar(gf5, Fraction(1, 2))) == "3"

    def test_non_invertible_denominator(self):
        """1/2 does not exist in characteristic 2."""
        with pytest.raises(PreconditionError):
            scalar(field_for(2), Fraction(1, 2))

    def test_rational_rendering(self):
        """Rationals print reduced."""
        qq = field_for(0)
        assert scalar_to_str(qq, scalar(qq, Fraction(6, 4))) == "3/2"
        assert scalar_to_str(qq, scalar(qq, -7)) == "-7"

    def test_residues_are_canonical(self):
        """Negative integers print as residues in 0..p-1."""
        gf7 = field_for(7)
        assert scalar_to_str(gf7, scalar(gf7, -1)) == "6"


class TestRing:
    """Tests for ring descriptors."""

    def test_equal_descriptors_share_backend(self):
        """Two descriptors with the same data interoperate."""
        assert Ring.projective(2).backend is Ring(3).backend

    def test_element_moves_between_orders(self, p2: Ring):
        """Moving to a lex ring keeps the polynomial."""
        t0, t1, t2 = p2.gens
        lex_ring = p2.with_order(MonomialOrder.lex())
        moved = lex_ring.element(t0 * t1 + t2**2)
        assert p2.element(moved) == t0 * t1 + t2**2

    def test_truncation_rejects_occurring_variable(self, p2: Ring):
        """Dropping a variable that occurs is an error."""
        t0, _, t2 = p2.gens
        with pytest.raises(RingMismatchError):
            p2.truncated(2).element(t0 * t2)

    def test_truncation_keeps_leading_variables(self, p2: Ring):
        """Dropping unused trailing variables succeeds."""
        t0, t1, _ = p2.gens
        moved = p2.truncated(2).element(t0 * t1)
        assert moved == p2.truncated(2).gens[0] * p2.truncated(2).gens[1]

    def test_field_mismatch(self, p2: Ring):
        """Polynomials do not cross characteristics."""
        with pytest.raises(RingMismatchError):
            Ring.projective(2, 3).element(p2.gens[0])

    def test_bad_block_size(self):
        """Block orders must split the variables."""
        with pytest.raises(PreconditionError):
            Ring(3, 0, MonomialOrder.eliminating(5))


class TestPolynomial:
    """Tests for polynomial helpers."""

    def test_derivative_dies_in_characteristic(self):
        """d/dt0 of t0^3 vanishes in characteristic 3."""
        ring = Ring.projective(2, 3)
        t0, t1, _ = ring.gens
        assert partial_derivative(t0**3, 0) == ring.zero
        assert partial_derivative(t0**3 * t1, 1) == t0**3

    def test_euler_identity(self, p2: Ring):
        """sum t_i d_i F = deg(F) F."""
        t0, t1, t2 = p2.gens
        f = t0**3 + 2 * t0 * t1 * t2 - t2**3
        assert euler_pairing(f) == 3 * f

    def test_poly_arith(self, p2: Ring):
        """Sum, difference and product in one ring."""
        t0, t1, _ = p2.gens
        assert poly_arith(t0, t1, "add") == t0 + t1
        assert poly_arith(t0, t1, "sub") == t0 - t1
        assert poly_arith(t0 + t1, t0 - t1, "mul") == t0**2 - t1**2

    def test_poly_arith_ring_mismatch(self, p2: Ring, p3: Ring):
        """Operands from different rings are rejected."""
        with pytest.raises(RingMismatchError):
            poly_arith(p2.gens[0], p3.gens[0], "add")

    def test_degree_and_homogeneity(self, p2: Ring):
        """Flag and degree for homogeneous, mixed and zero input."""
        t0, t1, t2 = p2.gens
        assert degree_and_homogeneity(t0 * t1 - t2**2) == (True, 2)
        assert degree_and_homogeneity(t0 + t1**2) == (False, None)
        assert degree_and_homogeneity(p2.zero) == (True, float("-inf"))

    def test_degree_of_zero(self, p2: Ring):
        """The zero polynomial has degree -inf."""
        assert degree(p2.zero) == float("-inf")

    def test_homogeneous_degree_rejects_mixed(self, p2: Ring):
        """Inhomogeneous input is rejected."""
        t0, t1, _ = p2.gens
        with pytest.raises(NotHomogeneousError):
            homogeneous_degree(t0**2 + t1)
        with pytest.raises(NotHomogeneousError):
            homogeneous_degree(p2.zero)

    def test_monomial_count(self):
        """There are C(n+d, d) monomials of degree d in n+1 variables."""
        assert len(list(monomials_of_degree(3, 2))) == 6
        assert len(list(monomials_of_degree(4, 3))) == 20

    def test_involves_only(self, p2: Ring):
        """Variable support test."""
        t0, t1, t2 = p2.gens
        assert involves_only(t0 * t1, 2)
        assert not involves_only(t0 * t2, 2)

    def test_proportional(self, p2: Ring):
        """Scalar multiples are proportional."""
        t0, t1, _ = p2.gens
        assert proportional(3 * t0 - t1, -6 * t0 + 2 * t1)
        assert not proportional(t0, t1)
        assert proportional(p2.zero, p2.zero)


class TestLinalg:
    """Tests for exact linear algebra."""

    def test_solve_and_nullspace(self):
        """A rank one system."""
        qq = field_for(0)
        rows = [[qq(1), qq(2)], [qq(2), qq(4)]]
        assert linalg.rank(rows, 2, qq) == 1
        assert linalg.solve(rows, [qq(3), qq(6)], 2, qq) == [qq(3), qq(0)]
        assert linalg.solve(rows, [qq(3), qq(7)], 2, qq) is None
        assert linalg.nullspace(rows, 2, qq) == [[qq(-2), qq(1)]]

    def test_empty_determinant(self):
        """The empty matrix has determinant one."""
        assert linalg.determinant([], field_for(0)) == 1


class TestCoordinates:
    """Tests for coordinate changes and seeded draws."""

    def test_draws_are_reproducible(self, p3: Ring):
        """The same seed gives the same forms."""
        assert random_linear_forms(p3, 7, 3) == random_linear_forms(p3, 7, 3)

    def test_draws_are_independent(self, p3: Ring):
        """Drawn coefficient rows have full rank."""
        rows = random_coefficient_rows(p3, 11, 4)
        assert linalg.rank(rows, 4, p3.domain) == 4

    def test_too_many_forms(self, p2: Ring):
        """More forms than variables cannot be independent."""
        with pytest.raises(PreconditionError):
            random_linear_forms(p2, 0, 4)

    def test_pullback_inverts(self, p3: Ring, twisted_cubic):
        """Changing coordinates and pulling back is the identity."""
        change = CoordinateChange.random(p3, 5)
        for g in twisted_cubic.generators:
            assert change.pullback(change.polynomial(g)) == g

    def test_identity_change(self, p2: Ring):
        """The identity change fixes polynomials."""
        t0, t1, t2 = p2.gens
        change = CoordinateChange.identity(p2)
        assert change.is_identity
        assert change.polynomial(t0 * t1 - t2**2) == t0 * t1 - t2**2

    def test_swap(self, p2: Ring):
        """A permutation matrix substitutes variables."""
        t0, t1, t2 = p2.gens
        swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        assert apply_linear_change(t0**2 * t2, swap, p2) == t1**2 * t2

    def test_singular_change(self, p2: Ring):
        """Singular matrices are rejected."""
        with pytest.raises(SingularMatrixError):
            CoordinateChange.from_matrix(p2, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])


class TestRedraws:
    """Tests for seeded redraws."""

    def test_redraws_until_success(self):
        """Draws use consecutive seeds."""
        seen: list[int] = []

        def action(seed: int) -> int:
            seen.append(seed)
            if seed < 12:
                raise GenericityError("test", "bad draw", seed)
            return seed

        assert with_redraws(action, 10, 5) == 12
        assert seen == [10, 11, 12]

    def test_budget_exhausted(self):
        """Every failure is reported once the budget is spent."""

        def action(seed: int) -> int:
            raise GenericityError("test", "always bad", seed)

        with pytest.raises(RedrawsExhaustedError):
            with_redraws(action, 0, 3)
