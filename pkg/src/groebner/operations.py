"""
Elimination, intersection, quotients and saturation.

Intersections use one tag variable u appended after t0..tn:
u*I + (1-u)*J is completed under a block order eliminating u.
"""

import logging
from functools import reduce

from src.algebra.polynomial import (
    degree,
    homogeneous_components,
    involves_only,
)
from src.algebra.ring import MonomialOrder, Polynomial
from src.constants import Saturation
from src.errors import PreconditionError
from src.groebner.basis import buchberger
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal

logger = logging.getLogger(__name__)


def elimination_ideal(ideal: Ideal, keep: int) -> Ideal:
    """
    I intersected with k[t0..t(keep-1)], still as an ideal of the full ring.

    Raises:
        PreconditionError: If keep is out of range.
    """
    nvars = ideal.ring.nvars
    if not 0 <= keep <= nvars:
        raise PreconditionError(f"cannot keep {keep} of {nvars} variables")
    if keep == nvars:
        return ideal
    basis = ideal.groebner(MonomialOrder.eliminating(keep))
    return Ideal(ideal.ring, [g for g in basis.elements if involves_only(g, keep)])


def intersect(first: Ideal, second: Ideal) -> Ideal:
    """Intersection of two ideals of the same ring."""
    if first.ring != second.ring:
        raise PreconditionError("ideals live in different rings")
    ring = first.ring
    if first.is_zero or second.is_zero:
        return Ideal.zero(ring)
    ext = ring.extended(1)
    u = ext.gens[-1]
    tagged = [u * ext.element(f) for f in first.generators]
    tagged += [(ext.one - u) * ext.element(g) for g in second.generators]
    basis = buchberger(
        tagged, ext.with_order(MonomialOrder.eliminating(ring.nvars)), with_transform=False
    )
    split = first.is_homogeneous and second.is_homogeneous
    generators: list[Polynomial] = []
    for g in basis.elements:
        if not involves_only(g, ring.nvars):
            continue
        parts = homogeneous_components(g).values() if split else (g,)
        generators.extend(ring.element(part) for part in parts)
    return Ideal(ring, generators)


def ideal_quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """
    (I : f) = {g : g f in I}, as (I intersected with (f)) / f.

    Raises:
        PreconditionError: If f is zero.
    """
    ring = ideal.ring
    f = ring.element(f)
    if not f:
        raise PreconditionError("quotient by the zero polynomial")
    if degree(f) == 0 or ideal.is_zero:
        return ideal
    meet = intersect(ideal, Ideal(ring, [f]))
    return Ideal(ring, [g.exquo(f) for g in meet.generators])


def saturation_wrt(ideal: Ideal, f: Polynomial) -> Ideal:
    """(I : f^inf), iterating quotients until they stabilize."""
    current = ideal
    steps = 0
    while True:
        following = ideal_quotient(current, f)
        steps += 1
        if following == current:
            logger.debug("Saturation stabilized", extra={"steps": steps})
            return following
        current = following


def _is_complete_intersection(ideal: Ideal) -> bool:
    data = hilbert_data(ideal)
    codim = ideal.ring.nvars - data.cone_dimension
    return ideal.is_homogeneous and not data.is_empty and len(ideal.generators) == codim


def saturate_irrelevant(ideal: Ideal) -> Ideal:
    """
    (I : m^inf) for m = (t0..tn), flagged saturated.

    Short cuts: principal and zero ideals, ideals with empty scheme,
    complete intersections, and ideals for which some t_i is a nonzerodivisor.
    Otherwise the per-variable saturations are intersected.
    """
    if ideal.saturated == Saturation.YES:
        return ideal
    ring = ideal.ring
    if ideal.is_zero:
        return ideal.marked(Saturation.YES)
    if ideal.is_unit or hilbert_data(ideal).is_empty:
        return Ideal.unit(ring)
    if len(ideal.generators) == 1 or _is_complete_intersection(ideal):
        return ideal.marked(Saturation.YES)

    quotients = []
    for t in ring.gens:
        q = ideal_quotient(ideal, t)
        if q == ideal:
            return ideal.marked(Saturation.YES)
        quotients.append(q)

    saturations = [saturation_wrt(q, t) for q, t in zip(quotients, ring.gens, strict=True)]
    result = reduce(intersect, saturations)
    logger.debug(
        "Ideal saturated",
        extra={"generators_before": len(ideal.generators), "generators_after": len(result.generators)},
    )
    return Ideal(ring, result.reduced_basis(), saturated=Saturation.YES, name=ideal.name)
