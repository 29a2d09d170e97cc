"""
Polynomial operations: arithmetic with ring checks, derivations, degrees.
"""

import math
from collections.abc import Iterable, Iterator
from itertools import combinations_with_replacement
from typing import Literal

from src.algebra.ring import Monomial, Polynomial
from src.errors import NotHomogeneousError, RingMismatchError

NEG_INF = -math.inf

ArithOp = Literal["add", "sub", "mul"]


def poly_arith(f: Polynomial, g: Polynomial, which: ArithOp) -> Polynomial:
    """
    Exact ring operation on two polynomials of the same ring.

    Raises:
        RingMismatchError: If f and g belong to different rings.
    """
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} and {g.ring} differ")
    if which == "add":
        return f + g
    if which == "sub":
        return f - g
    if which == "mul":
        return f * g
    raise ValueError(f"unknown operation: {which}")


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """
    Formal partial derivative with respect to t_i.

    Coefficients are multiplied by the old exponent inside the coefficient
    field, so terms die when p divides the exponent.
    """
    ring = f.ring
    if not 0 <= i < ring.ngens:
        raise IndexError(f"variable index {i} out of range")
    domain = ring.domain
    terms = {}
    for monom, coeff in f.iterterms():
        e = monom[i]
        if e == 0:
            continue
        c = coeff * domain.convert(e)
        if c:
            terms[monom[:i] + (e - 1,) + monom[i + 1 :]] = c
    return ring.from_dict(terms)


def gradient(f: Polynomial) -> tuple[Polynomial, ...]:
    return tuple(partial_derivative(f, i) for i in range(f.ring.ngens))


def euler_pairing(f: Polynomial) -> Polynomial:
    """Sum of t_i * d_i f; equals deg(f) * f for homogeneous f."""
    ring = f.ring
    result = ring.zero
    for t, df in zip(ring.gens, gradient(f), strict=True):
        result += t * df
    return result


def degree(f: Polynomial) -> float:
    """Total degree; -inf for the zero polynomial."""
    if not f:
        return NEG_INF
    return max(sum(m) for m in f.itermonoms())


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(m) for m in f.itermonoms()}) <= 1


def degree_and_homogeneity(f: Polynomial) -> tuple[bool, float | None]:
    """
    Homogeneity flag and degree.

    Returns:
        (True, d) for homogeneous f of degree d, (True, -inf) for zero,
        (False, None) otherwise.
    """
    if not f:
        return True, NEG_INF
    if not is_homogeneous(f):
        return False, None
    return True, degree(f)


def homogeneous_degree(f: Polynomial) -> int:
    """
    Degree of a nonzero homogeneous polynomial.

    Raises:
        NotHomogeneousError: If f is zero or inhomogeneous.
    """
    ok, d = degree_and_homogeneity(f)
    if not ok or d is None or d == NEG_INF:
        raise NotHomogeneousError("expected a nonzero homogeneous polynomial")
    return int(d)


def homogeneous_components(f: Polynomial) -> dict[int, Polynomial]:
    parts: dict[int, dict[Monomial, object]] = {}
    for monom, coeff in f.iterterms():
        parts.setdefault(sum(monom), {})[monom] = coeff
    return {d: f.ring.from_dict(terms) for d, terms in sorted(parts.items())}


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree d in nvars variables."""
    if d < 0:
        return
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield tuple(exps)


def involves_only(f: Polynomial, keep: int) -> bool:
    """True if f involves only the first `keep` variables."""
    return all(not any(m[keep:]) for m in f.itermonoms())


def nonzero(polys: Iterable[Polynomial]) -> list[Polynomial]:
    return [f for f in polys if f]


def proportional(f: Polynomial, g: Polynomial) -> bool:
    """True if f and g agree up to a nonzero scalar (both zero counts)."""
    if not f or not g:
        return not f and not g
    return f.monic() == g.monic()
