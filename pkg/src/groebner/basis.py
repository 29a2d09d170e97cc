"""
Buchberger completion with transform records, and normal forms with witnesses.

Pair handling follows the classical recipe: S-polynomials of monic
elements, Gebauer-Moeller pair elimination, normal selection strategy
with a deterministic tie-break on pair indices.
"""

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass

from src.algebra.ring import Monomial, MonomialOrder, Polynomial, Ring
from src.observability.metrics import get_metrics

logger = logging.getLogger(__name__)

Pair = tuple[int, int]
Row = list[Polynomial]


@dataclass(frozen=True)
class MembershipWitness:
    """
    f = sum(cofactors[i] * generators[i]) + remainder, exactly.

    Attributes:
        cofactors: One cofactor per generator of the ideal.
        remainder: Normal form of f; zero iff f is in the ideal.
    """

    cofactors: tuple[Polynomial, ...]
    remainder: Polynomial

    @property
    def is_member(self) -> bool:
        return not self.remainder

    def verify(self, f: Polynomial, generators: Sequence[Polynomial]) -> bool:
        """Re-expand the witness identity."""
        total = self.remainder
        for c, g in zip(self.cofactors, generators, strict=True):
            total += c * g
        return total == f


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division; quotients are returned even for zero dividends."""
    ring = f.ring
    if not f or not divisors:
        return [ring.zero] * len(divisors), f
    quotients, remainder = f.div(list(divisors))
    return list(quotients), remainder


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced Groebner basis of an ideal under one monomial order.

    Attributes:
        ring: Ring whose order the basis is reduced for.
        elements: Monic, auto-reduced basis sorted by leading monomial.
        generators: The original (nonzero) generators, moved into `ring`.
        transform: Row k expresses elements[k] in the generators; None when
            completion ran without tracking.
    """

    ring: Ring
    elements: tuple[Polynomial, ...]
    generators: tuple[Polynomial, ...]
    transform: tuple[tuple[Polynomial, ...], ...] | None = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.LM for g in self.elements)

    @property
    def is_unit(self) -> bool:
        """True iff the ideal is the whole ring."""
        return any(not any(m) for m in self.leading_monomials)

    def remainder(self, f: Polynomial) -> Polynomial:
        return divide(self.ring.element(f), self.elements)[1]

    def contains(self, f: Polynomial) -> bool:
        return not self.remainder(f)

    def normal_form(self, f: Polynomial) -> MembershipWitness:
        """
        Reduce f and express the reduced part in the original generators.

        Raises:
            ValueError: If the basis was computed without transform records.
        """
        if self.transform is None:
            raise ValueError("basis was computed without transform records")
        quotients, remainder = divide(self.ring.element(f), self.elements)
        cofactors = [self.ring.zero] * len(self.generators)
        for q, row in zip(quotients, self.transform, strict=True):
            if not q:
                continue
            for k, entry in enumerate(row):
                if entry:
                    cofactors[k] += q * entry
        return MembershipWitness(tuple(cofactors), remainder)

    def verify_transform(self) -> bool:
        """Check that every transform row reproduces its basis element."""
        if self.transform is None:
            return False
        for g, row in zip(self.elements, self.transform, strict=True):
            total = self.ring.zero
            for c, h in zip(row, self.generators, strict=True):
                total += c * h
            if total != g:
                return False
        return True


def normal_form(f: Polynomial, basis: GroebnerBasis) -> MembershipWitness:
    """Normal form of f with respect to a tracked Groebner basis."""
    return basis.normal_form(f)


def _spoly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Monomial, Monomial]:
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    uf = ring.monomial_div(lcm, f.LM)
    ug = ring.monomial_div(lcm, g.LM)
    return f.mul_monom(uf) - g.mul_monom(ug), uf, ug


def _update(lms: list[Monomial], pairs: set[Pair], lmf: Monomial, ring: Ring) -> set[Pair]:
    """Gebauer-Moeller update of the pair set when an element with leading monomial lmf is added."""
    backend = ring.backend
    lcm = backend.monomial_lcm
    mul = backend.monomial_mul
    div = backend.monomial_div
    new_index = len(lms)

    kept = {
        p
        for p in pairs
        if (
            not div(lcm(lms[p[0]], lms[p[1]]), lmf)
            or lcm(lms[p[0]], lms[p[1]]) == lcm(lms[p[0]], lmf)
            or lcm(lms[p[0]], lms[p[1]]) == lcm(lms[p[1]], lmf)
        )
    }
    by_lcm: dict[Monomial, list[int]] = {}
    for i, lm in enumerate(lms):
        by_lcm.setdefault(lcm(lm, lmf), []).append(i)
    minimal: list[Monomial] = []
    for candidate in sorted(by_lcm, key=backend.order):
        if all(not div(candidate, other) for other in minimal):
            minimal.append(candidate)
    fresh = set()
    for candidate in minimal:
        if not any(lcm(lms[i], lmf) == mul(lms[i], lmf) for i in by_lcm[candidate]):
            fresh.add((min(by_lcm[candidate]), new_index))
    return kept | fresh


def _scaled(f: Polynomial, row: Row | None) -> tuple[Polynomial, Row | None]:
    inv = f.ring.domain.one / f.LC
    monic = f.monic()
    if row is None:
        return monic, None
    return monic, [entry * inv for entry in row]


def _combine(row: Row, quotients: Sequence[Polynomial], rows: Sequence[Row]) -> Row:
    out = list(row)
    for q, r in zip(quotients, rows, strict=True):
        if not q:
            continue
        for k, entry in enumerate(r):
            if entry:
                out[k] -= q * entry
    return out


def buchberger(
    generators: Sequence[Polynomial],
    ring: Ring,
    *,
    with_transform: bool = True,
) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by `generators` under `ring.order`.

    Args:
        generators: Polynomials in any ring with the same variables and field.
        ring: Target ring; its order is the order of the basis.
        with_transform: Track expressions of basis elements in the generators.

    Returns:
        GroebnerBasis: Deterministic for a fixed generator sequence.
    """
    started = time.perf_counter()
    backend = ring.backend
    gens = tuple(g for g in (ring.element(f) for f in generators) if g)
    size = len(gens)

    basis: list[Polynomial] = []
    rows: list[Row] = []
    lms: list[Monomial] = []
    pairs: set[Pair] = set()

    def unit_row(k: int) -> Row:
        row = [ring.zero] * size
        row[k] = ring.one
        return row

    def add(f: Polynomial, row: Row | None) -> None:
        nonlocal pairs
        monic, scaled_row = _scaled(f, row)
        pairs = _update(lms, pairs, monic.LM, ring)
        basis.append(monic)
        lms.append(monic.LM)
        if scaled_row is not None:
            rows.append(scaled_row)

    for k, g in enumerate(gens):
        add(g, unit_row(k) if with_transform else None)

    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (backend.order(backend.monomial_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.remove((i, j))
        s, ui, uj = _spoly(basis[i], basis[j])
        reductions += 1
        quotients, r = divide(s, basis)
        if not r:
            continue
        row = None
        if with_transform:
            s_row = [a.mul_monom(ui) - b.mul_monom(uj) for a, b in zip(rows[i], rows[j], strict=True)]
            row = _combine(s_row, quotients, rows)
        add(r, row)

    elements, transform = _reduce(basis, rows if with_transform else None, ring)
    elapsed = time.perf_counter() - started
    get_metrics().record_groebner(str(ring.order), reductions, elapsed)
    logger.debug(
        "Groebner basis completed",
        extra={
            "order": str(ring.order),
            "generators": size,
            "elements": len(elements),
            "spairs": reductions,
            "seconds": round(elapsed, 6),
        },
    )
    return GroebnerBasis(ring, elements, gens, transform)


def _reduce(
    basis: list[Polynomial], rows: list[Row] | None, ring: Ring
) -> tuple[tuple[Polynomial, ...], tuple[tuple[Polynomial, ...], ...] | None]:
    """Minimalize, interreduce and sort by leading monomial."""
    backend = ring.backend
    order = sorted(range(len(basis)), key=lambda k: backend.order(basis[k].LM))
    minimal: list[int] = []
    for k in order:
        if all(not backend.monomial_div(basis[k].LM, basis[m].LM) for m in minimal):
            minimal.append(k)

    reduced: list[tuple[Polynomial, Row | None]] = []
    for k in minimal:
        others = [basis[m] for m in minimal if m != k]
        quotients, r = divide(basis[k], others)
        row = None
        if rows is not None:
            other_rows = [rows[m] for m in minimal if m != k]
            row = _combine(rows[k], quotients, other_rows)
        reduced.append(_scaled(r, row))

    reduced.sort(key=lambda item: backend.order(item[0].LM))
    elements = tuple(g for g, _ in reduced)
    if rows is None:
        return elements, None
    return elements, tuple(tuple(row) for _, row in reduced if row is not None)
