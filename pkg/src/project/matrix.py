"""
Finite-module algebra over the parameter subring k[t_0..t_(N-1)].

After a generic change of coordinates, S/J is a free module over the parameter
subring with basis the monomials M_1..M_e of an Artinian reduction. Multiplying
by the distinguished variable t_N gives a matrix A; its characteristic
polynomial D = det(t_N - A) cuts out the projection, and the cofactors of
t_N - A give the multiplier B that moves any class into k[t_0..t_N].
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from src.acm.reduction import ArtinianReduction
from src.algebra import linalg
from src.algebra.polynomial import degree, homogeneous_degree, monomials_of_degree
from src.algebra.ring import Polynomial, Ring
from src.constants import STAGE_DISTINGUISHED, STAGE_MULTIPLICATION, STAGE_MULTIPLIER, STAGE_SUBRING
from src.errors import GenericityError, PreconditionError
from src.groebner.operations import ideal_quotient

logger = logging.getLogger(__name__)


def _parameter_count(red: ArtinianReduction) -> int:
    """Number of parameters; the reduction must be cut by t_0..t_(N-1)."""
    ring = red.ideal.ring
    count = len(red.forms)
    if count >= ring.nvars or tuple(red.forms) != ring.gens[:count]:
        raise PreconditionError("reduction must be cut by the leading variables t_0..t_(N-1)")
    return count


def express_in_basis(g: Polynomial, red: ArtinianReduction) -> list[Polynomial]:
    """
    Coefficients a_1..a_e in the parameter subring with g = sum(a_j M_j) mod J.

    Solved degree by degree over normal forms modulo J.

    Raises:
        GenericityError: If the graded system has no solution, i.e. the basis
            monomials do not generate S/J over the parameters.
    """
    ring = red.ideal.ring
    params = _parameter_count(red)
    basis = red.basis_polynomials()
    g = ring.element(g)
    if not g:
        return [ring.zero] * len(basis)
    target = homogeneous_degree(g)
    gb = red.ideal.groebner()
    pad = (0,) * (ring.nvars - params)

    labels: list[tuple[int, Polynomial]] = []
    columns: list[Polynomial] = []
    for j, (m, w) in enumerate(zip(basis, red.degrees, strict=True)):
        for mu in monomials_of_degree(params, target - w):
            coefficient = ring.monomial(mu + pad)
            labels.append((j, coefficient))
            columns.append(gb.remainder(coefficient * m))
    rhs = gb.remainder(g)

    support = sorted({mono for col in columns for mono in col.itermonoms()} | set(rhs.itermonoms()))
    index = {mono: r for r, mono in enumerate(support)}
    rows = [[ring.domain.zero] * len(columns) for _ in support]
    for c, col in enumerate(columns):
        for mono, coeff in col.iterterms():
            rows[index[mono]][c] = coeff
    values = [ring.domain.zero] * len(support)
    for mono, coeff in rhs.iterterms():
        values[index[mono]] = coeff

    solution = linalg.solve(rows, values, len(columns), ring.domain)
    if solution is None:
        raise GenericityError(STAGE_SUBRING, f"{g} is not in the span of the basis", red.seed)
    result = [ring.zero] * len(basis)
    for (j, coefficient), value in zip(labels, solution, strict=True):
        if value:
            result[j] += coefficient * value
    return result


@dataclass(frozen=True)
class MultiplicationMatrix:
    """
    Matrix of multiplication by t_N on S/J over the parameter subring.

    Row i satisfies t_N M_i = sum_j entries[i][j] M_j mod J, with entries[i][j]
    homogeneous of degree 1 + w_i - w_j in t_0..t_(N-1).
    """

    ring: Ring
    distinguished: int
    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def characteristic_matrix(self) -> list[list[Polynomial]]:
        """t_N * Id - A."""
        t = self.ring.gens[self.distinguished]
        return [
            [(t if i == j else self.ring.zero) - a for j, a in enumerate(row)]
            for i, row in enumerate(self.entries)
        ]

    @cached_property
    def eliminant(self) -> Polynomial:
        domain = self.ring.backend.to_domain()
        return self.ring.element(linalg.determinant(self.characteristic_matrix(), domain))

    @cached_property
    def cofactors(self) -> tuple[Polynomial, ...]:
        """D_j: determinant of t_N - A without its last row and column j."""
        domain = self.ring.backend.to_domain()
        top = self.characteristic_matrix()[:-1]
        result = []
        for j in range(self.size):
            minor = [[a for k, a in enumerate(row) if k != j] for row in top]
            result.append(self.ring.element(linalg.determinant(minor, domain)))
        return tuple(result)

    def subring_image(self, j: int) -> Polynomial:
        """Class of B M_j in k[t_0..t_N]: (-1)^j D_j."""
        d = self.cofactors[j]
        return d if j % 2 == 0 else -d


def multiplication_matrix(red: ArtinianReduction) -> MultiplicationMatrix:
    """
    Multiplication by the distinguished variable t_N on the basis of `red`.

    Raises:
        GenericityError: If t_N is a zerodivisor modulo J or some product is
            not in the span of the basis.
    """
    J = red.ideal
    ring = J.ring
    params = _parameter_count(red)
    t = ring.gens[params]
    if ideal_quotient(J, t) != J:
        raise GenericityError(STAGE_DISTINGUISHED, f"{t} is a zerodivisor modulo the ideal", red.seed)
    rows = []
    for m in red.basis_polynomials():
        try:
            rows.append(tuple(express_in_basis(t * m, red)))
        except GenericityError as exc:
            raise GenericityError(STAGE_MULTIPLICATION, exc.detail, red.seed) from exc
    return MultiplicationMatrix(ring, params, tuple(rows))


def eliminant_D(A: MultiplicationMatrix) -> Polynomial:
    """det(t_N - A): homogeneous of degree e, monic in t_N."""
    return A.eliminant


def cofactors(A: MultiplicationMatrix) -> tuple[Polynomial, ...]:
    return A.cofactors


def multiplier_B(A: MultiplicationMatrix, red: ArtinianReduction) -> Polynomial:
    """
    The multiplier B = D_1 (B = 1 when e = 1).

    Checks B is not in J, has degree e - r, and that B M_j = (-1)^j D_j mod J
    for every basis monomial.

    Raises:
        GenericityError: If any of these fails.
    """
    J = red.ideal
    B = A.cofactors[0]
    if J.contains(B):
        raise GenericityError(STAGE_MULTIPLIER, "multiplier lies in the ideal", red.seed)
    expected = red.multiplicity - red.regularity
    if degree(B) != expected:
        raise GenericityError(
            STAGE_MULTIPLIER, f"multiplier has degree {degree(B)}, expected {expected}", red.seed
        )
    for j, m in enumerate(red.basis_polynomials()):
        if not J.contains(B * m - A.subring_image(j)):
            raise GenericityError(STAGE_MULTIPLIER, f"cofactor identity fails at {j}", red.seed)
    return B


def subring_express(g: Polynomial, red: ArtinianReduction, A: MultiplicationMatrix) -> Polynomial:
    """
    G_bar in k[t_0..t_N] with B g = G_bar mod J.

    Writes g = sum(a_j M_j) over the parameters and substitutes the subring
    image of each B M_j; the membership of B g - G_bar is checked exactly.

    Raises:
        GenericityError: If g cannot be expressed or the identity fails.
    """
    J = red.ideal
    ring = J.ring
    g = ring.element(g)
    coefficients = express_in_basis(g, red)
    result = ring.zero
    for j, a in enumerate(coefficients):
        if a:
            result += a * A.subring_image(j)
    if not J.contains(A.cofactors[0] * g - result):
        raise GenericityError(STAGE_SUBRING, "subring identity fails", red.seed)
    return result
