"""
Fields on hypersurfaces V(F): trivial fields, their decomposition on smooth
hypersurfaces, the minimal invariant degree and the curl construction when
the characteristic divides the degree.
"""

import logging
from fractions import Fraction

from src.algebra import linalg
from src.algebra.polynomial import (
    gradient,
    homogeneous_components,
    homogeneous_degree,
    monomials_of_degree,
)
from src.algebra.ring import Monomial, Polynomial, Ring
from src.algebra.scalars import scalar
from src.errors import NotHomogeneousError, PreconditionError
from src.groebner.basis import divide
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal, ideal_membership
from src.vfield.field import VectorField
from src.vfield.invariance import invariance_check

logger = logging.getLogger(__name__)

# Upper-triangular matrix of a trivial field; keys (i, j) with i < j
KoszulMatrix = dict[tuple[int, int], Polynomial]


def _hypersurface(F: Polynomial) -> tuple[Ring, Polynomial, int]:
    ring = Ring.of(F)
    F = ring.element(F)
    d = homogeneous_degree(F)
    return ring, F, d


def is_smooth_hypersurface(F: Polynomial) -> bool:
    """True iff the partial derivatives of F have no common projective zero."""
    ring, F, _ = _hypersurface(F)
    return hilbert_data(Ideal(ring, gradient(F))).dimension == -1


def trivial_field(F: Polynomial, P: KoszulMatrix) -> VectorField:
    """
    The field sum over i<j of P_ij (d_jF d_i - d_iF d_j).

    It satisfies X(F) = 0 identically, so it always leaves V(F) invariant.

    Raises:
        NotHomogeneousError: If F or an entry of P is inhomogeneous, or the
            entries have different degrees.
        PreconditionError: On keys outside 0 <= i < j <= n.
    """
    ring, F, d = _hypersurface(F)
    grads = gradient(F)
    degrees = set()
    entries: KoszulMatrix = {}
    for (i, j), value in P.items():
        if not 0 <= i < j < ring.nvars:
            raise PreconditionError(f"trivial field entries need 0 <= i < j <= {ring.n}, got {(i, j)}")
        value = ring.element(value)
        if value:
            degrees.add(homogeneous_degree(value))
            entries[(i, j)] = value
    if len(degrees) > 1:
        raise NotHomogeneousError(f"trivial field entries have different degrees {sorted(degrees)}")
    q = degrees.pop() if degrees else 0

    coeffs = [ring.zero] * ring.nvars
    for (i, j), value in entries.items():
        coeffs[i] += value * grads[j]
        coeffs[j] -= value * grads[i]
    return VectorField.of(ring, coeffs, degree=q + d - 1)


def koszul_decompose(X: VectorField, F: Polynomial) -> KoszulMatrix:
    """
    Write a field leaving a smooth V(F) invariant as a trivial field.

    Normalizes X by the multiplier P of X(F) = P F so that the coefficients
    form a relation among the partials, then peels the relation against the
    regular sequence d_0F, ..., d_nF from the last partial down.

    Returns:
        P with trivial_field(F, P) equivalent to X. The entries are not unique.

    Raises:
        PreconditionError: If V(F) is singular, the characteristic divides
            deg F, or X does not leave V(F) invariant.
    """
    ring, F, d = _hypersurface(F)
    if X.ring != ring:
        raise PreconditionError("field and hypersurface live on different projective spaces")
    p = ring.characteristic
    if p and d % p == 0:
        raise PreconditionError(f"characteristic {p} divides the degree {d}")
    grads = gradient(F)
    if hilbert_data(Ideal(ring, grads)).dimension != -1:
        raise PreconditionError("hypersurface is singular")
    if not invariance_check(X, Ideal(ring, [F])).verdict:
        raise PreconditionError("field does not leave the hypersurface invariant")

    (multiplier,), remainder = divide(X.apply(F), [F])
    assert not remainder
    inv_d = scalar(ring.domain, Fraction(1, d))
    relation = [g - multiplier * t * inv_d for g, t in zip(X.coefficients, ring.gens, strict=True)]

    P: KoszulMatrix = {}
    for k in range(ring.n, 0, -1):
        top = relation[k]
        if not top:
            continue
        target = homogeneous_degree(top) - (d - 1)
        _, witness = ideal_membership(top, Ideal(ring, grads[:k]))
        if not witness.is_member:
            raise PreconditionError(f"relation does not reduce at position {k}")
        for i, cofactor in enumerate(witness.cofactors):
            q = homogeneous_components(cofactor).get(target, ring.zero)
            if not q:
                continue
            P[(i, k)] = P.get((i, k), ring.zero) - q
            relation[i] += q * grads[k]
        relation[k] = ring.zero

    P = {key: value for key, value in P.items() if value}
    rebuilt = trivial_field(F, P) if P else VectorField.of(ring, [ring.zero] * ring.nvars, X.degree)
    if not rebuilt.equivalent(X):
        raise PreconditionError("relation module did not reproduce the field")
    logger.debug("Field decomposed", extra={"entries": len(P), "degree": X.degree})
    return P


def _invariant_system(F: Polynomial, q: int) -> tuple[Ring, list[Monomial], list[list]]:
    """
    Kernel of (G, P) -> sum G_i d_iF - P F in degree q, projected to the G part.

    Unknown order: coefficients of G_0..G_n over degree-q monomials, then P.
    """
    ring = Ring.of(F)
    grads = gradient(F)
    g_monomials = list(monomials_of_degree(ring.nvars, q))
    p_monomials = list(monomials_of_degree(ring.nvars, q - 1))

    columns: list[Polynomial] = []
    for i in range(ring.nvars):
        for mu in g_monomials:
            columns.append(ring.monomial(mu) * grads[i])
    for nu in p_monomials:
        columns.append(-ring.monomial(nu) * F)

    support = sorted({m for col in columns for m in col.itermonoms()})
    index = {m: r for r, m in enumerate(support)}
    rows = [[ring.domain.zero] * len(columns) for _ in support]
    for c, col in enumerate(columns):
        for monom, coeff in col.iterterms():
            rows[index[monom]][c] = coeff
    kernel = linalg.nullspace(rows, len(columns), ring.domain)
    g_size = ring.nvars * len(g_monomials)
    return ring, g_monomials, [v[:g_size] for v in kernel]


def _radial_rows(ring: Ring, g_monomials: list[Monomial], q: int) -> list[list]:
    position = {m: k for k, m in enumerate(g_monomials)}
    width = len(g_monomials)
    rows = []
    for h in monomials_of_degree(ring.nvars, q - 1):
        row = [ring.domain.zero] * (ring.nvars * width)
        for i in range(ring.nvars):
            mu = tuple(e + (1 if k == i else 0) for k, e in enumerate(h))
            row[i * width + position[mu]] = ring.domain.one
        rows.append(row)
    return rows


def _field_in_degree(F: Polynomial, q: int) -> VectorField | None:
    ring, g_monomials, kernel = _invariant_system(F, q)
    radial = _radial_rows(ring, g_monomials, q)
    width = ring.nvars * len(g_monomials)
    base = linalg.rank(radial, width, ring.domain)
    for vector in kernel:
        if linalg.rank(radial + [vector], width, ring.domain) > base:
            size = len(g_monomials)
            coeffs = [
                ring.from_terms(dict(zip(g_monomials, vector[i * size : (i + 1) * size], strict=True)))
                for i in range(ring.nvars)
            ]
            return VectorField.of(ring, coeffs, degree=q)
    return None


def minimal_invariant_field(F: Polynomial) -> VectorField:
    """
    A nonzero field of least degree leaving V(F) invariant.

    Solves sum G_i d_iF = P F degree by degree, discarding radial multiples,
    so the search is valid whatever the characteristic.

    Raises:
        NotHomogeneousError: If F is zero or inhomogeneous.
        PreconditionError: If F is constant.
    """
    ring, F, d = _hypersurface(F)
    if d == 0:
        raise PreconditionError("a constant does not define a hypersurface")
    for q in range(d):
        witness = _field_in_degree(F, q)
        if witness is not None:
            logger.debug("Minimal invariant degree found", extra={"q": q, "degree": d})
            return witness
    raise PreconditionError(f"no invariant field of degree below {d}; is F squarefree?")


def min_invariant_degree(F: Polynomial) -> int:
    """The invariant q: least degree of a nonzero field leaving V(F) invariant."""
    return minimal_invariant_field(F).degree


def remark14_field(F: Polynomial) -> VectorField:
    """
    Curl field of a plane curve whose degree is divisible by the characteristic.

    F is split greedily as t_0 H_0 + t_1 H_1 + t_2 H_2 (each term goes to its
    first variable) and the field has coefficients
    (d_1H_2 - d_2H_1, d_2H_0 - d_0H_2, d_0H_1 - d_1H_0), of degree d - 2.

    Raises:
        PreconditionError: Outside P^2, in characteristic 0, or when p does not
            divide deg F.
    """
    ring, F, d = _hypersurface(F)
    p = ring.characteristic
    if ring.n != 2:
        raise PreconditionError("the curl construction needs a plane curve")
    if p == 0 or d % p != 0 or d < 2:
        raise PreconditionError(f"characteristic {p} must be positive and divide the degree {d}")

    parts: list[dict[Monomial, object]] = [{}, {}, {}]
    for monom, coeff in F.iterterms():
        i = next(k for k, e in enumerate(monom) if e)
        lowered = tuple(e - 1 if k == i else e for k, e in enumerate(monom))
        parts[i][lowered] = coeff
    H = [ring.from_terms(part) for part in parts]
    dH = [gradient(h) for h in H]
    coeffs = [
        dH[2][1] - dH[1][2],
        dH[0][2] - dH[2][0],
        dH[1][0] - dH[0][1],
    ]
    X = VectorField.of(ring, coeffs, degree=d - 2)
    if not X.is_zero() and not invariance_check(X, Ideal(ring, [F])).verdict:
        raise PreconditionError("curl field does not leave the curve invariant")
    return X
