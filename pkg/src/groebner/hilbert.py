"""
Hilbert series data from the leading-term ideal.
"""

from dataclasses import dataclass
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.polynomial import monomials_of_degree
from src.algebra.ring import Monomial
from src.errors import PreconditionError
from src.groebner.ideal import Ideal

_SERIES = PolyRing("t", ZZ, lex)
_T = _SERIES.gens[0]


@dataclass(frozen=True)
class HilbertData:
    """
    Attributes:
        dimension: Projective dimension of the scheme, -1 when empty.
        degree: Degree (multiplicity); the length when the scheme is empty.
        numerator: Coefficients (low to high) of the Hilbert series numerator
            over (1 - t)^(n+1).
    """

    dimension: int
    degree: int
    numerator: tuple[int, ...]

    @property
    def cone_dimension(self) -> int:
        return self.dimension + 1

    @property
    def is_empty(self) -> bool:
        return self.dimension < 0


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def _minimal(gens: frozenset[Monomial]) -> frozenset[Monomial]:
    ordered = sorted(gens, key=sum)
    kept: list[Monomial] = []
    for m in ordered:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def _disjoint_supports(gens: frozenset[Monomial]) -> bool:
    seen: set[int] = set()
    for m in gens:
        support = {i for i, e in enumerate(m) if e}
        if support & seen:
            return False
        seen |= support
    return True


@lru_cache(maxsize=8192)
def _numerator(gens: frozenset[Monomial]) -> PolyElement:
    """Numerator N with HS(S/<gens>) = N / (1-t)^nvars."""
    gens = _minimal(gens)
    if not gens:
        return _SERIES.one
    if _disjoint_supports(gens):
        result = _SERIES.one
        for m in gens:
            result *= _SERIES.one - _T ** sum(m)
        return result
    pivot = max(gens)
    rest = gens - {pivot}
    colon = frozenset(tuple(max(a - b, 0) for a, b in zip(g, pivot, strict=True)) for g in rest)
    return _numerator(rest) - _T ** sum(pivot) * _numerator(colon)


def hilbert_data(ideal: Ideal) -> HilbertData:
    """
    Dimension and degree of the projective scheme of a homogeneous ideal.

    The unit ideal is reported as empty with degree 0.
    """
    basis = ideal.groebner()
    if basis.is_unit:
        return HilbertData(-1, 0, ())
    numerator = _numerator(frozenset(basis.leading_monomials))
    coefficients = dict((m[0], int(c)) for m, c in numerator.iterterms())
    top = max(coefficients, default=0)
    series = tuple(coefficients.get(k, 0) for k in range(top + 1))

    reduced = numerator
    cone = ideal.ring.nvars
    while cone > 0 and sum(int(c) for c in reduced.itercoeffs()) == 0:
        reduced = reduced.exquo(_SERIES.one - _T)
        cone -= 1
    return HilbertData(cone - 1, sum(int(c) for c in reduced.itercoeffs()), series)


def graded_piece_basis(ideal: Ideal, d: int) -> list[Monomial]:
    """Standard monomials of degree d, highest first under grevlex."""
    leads = ideal.groebner().leading_monomials
    ring = ideal.ring
    piece = [m for m in monomials_of_degree(ring.nvars, d) if not any(_divides(lm, m) for lm in leads)]
    return sorted(piece, key=ring.leading_key, reverse=True)


def hilbert_function(ideal: Ideal, d: int) -> int:
    return len(graded_piece_basis(ideal, d))


def standard_monomials(ideal: Ideal) -> list[Monomial]:
    """
    All standard monomials of an Artinian ideal, by ascending degree then grevlex.

    Raises:
        PreconditionError: If the quotient is not finite-dimensional.
    """
    if not hilbert_data(ideal).is_empty:
        raise PreconditionError("quotient ring is not Artinian")
    result: list[Monomial] = []
    d = 0
    while True:
        piece = graded_piece_basis(ideal, d)
        if not piece:
            return result
        result.extend(reversed(piece))
        d += 1
