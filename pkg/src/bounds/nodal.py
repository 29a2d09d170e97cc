"""
Singularity diagnostics for plane curves, and heuristic reducibility.

A reduced plane curve has at most ordinary nodes iff its singular scheme
Sigma = (F, dF) is reduced: every singular point then has Tjurina length one.
Reducedness of the zero-dimensional Sigma is tested on generic projections to
P^1: Sigma is reduced iff its length equals the number of distinct roots of
the binary form cutting out some generic image.
"""

import logging
from dataclasses import dataclass

from src.algebra.coordinates import CoordinateChange
from src.algebra.polynomial import degree, gradient
from src.algebra.ring import Polynomial, Ring
from src.config import get_settings
from src.constants import NodalVerdict, Reducibility
from src.errors import InvariantRegularityError, PreconditionError
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal
from src.groebner.operations import elimination_ideal, saturate_irrelevant
from src.project.pipeline import project_variety

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodalDiagnosis:
    """
    Attributes:
        verdict: Singularity type of the curve.
        singular_scheme: Saturated ideal of the singular scheme.
        tjurina: Length of the singular scheme (total Tjurina number).
        seeds: Distinct points seen per seed; None marks a failed projection.
    """

    verdict: NodalVerdict
    singular_scheme: Ideal
    tjurina: int
    seeds: tuple[tuple[int, int | None], ...] = ()

    @property
    def at_most_nodes(self) -> bool:
        return self.verdict in (NodalVerdict.SMOOTH, NodalVerdict.NODAL)


def _distinct_roots(h: Polynomial) -> int:
    """Number of distinct roots of a binary form: degree of its squarefree part."""
    common = h
    for partial in gradient(h):
        if partial:
            common = common.gcd(partial)
    return int(degree(h)) - int(degree(common))


def _points_seen(sigma: Ideal, seed: int) -> int | None:
    """Distinct points of sigma seen on a generic projection to P^1."""
    ring = sigma.ring
    change = CoordinateChange.random(ring, seed)
    image = saturate_irrelevant(elimination_ideal(sigma.transformed(change), 2).restricted(2))
    generators = image.reduced_basis()
    if len(generators) != 1:
        return None
    return _distinct_roots(generators[0])


def nodal_diagnostic(F: Polynomial, seed: int = 0, seeds: int | None = None) -> NodalDiagnosis:
    """
    Decide whether the plane curve V(F) has at most ordinary nodes.

    Args:
        F: Squarefree homogeneous polynomial in three variables.
        seed: Seed of the first projection.
        seeds: Number of projections (from settings by default).

    Raises:
        PreconditionError: If F is not a plane curve.
    """
    ring = Ring.of(F)
    if ring.n != 2:
        raise PreconditionError("the nodal diagnostic needs a plane curve")
    F = ring.element(F)
    seeds = get_settings().nodal_seeds if seeds is None else seeds
    sigma = saturate_irrelevant(Ideal(ring, (F, *gradient(F)), name="Sigma"))
    data = hilbert_data(sigma)
    if data.is_empty:
        return NodalDiagnosis(NodalVerdict.SMOOTH, sigma, 0)
    if data.dimension > 0:
        return NodalDiagnosis(NodalVerdict.NOT_NODAL, sigma, data.degree)

    results = tuple((seed + k, _points_seen(sigma, seed + k)) for k in range(seeds))
    counts = [c for _, c in results if c is not None]
    if not counts:
        verdict = NodalVerdict.INDETERMINATE
    elif max(counts) == data.degree:
        verdict = NodalVerdict.NODAL
    else:
        verdict = NodalVerdict.NOT_NODAL
    logger.debug(
        "Nodal diagnostic finished",
        extra={"tjurina": data.degree, "verdict": verdict.value, "seed": seed},
    )
    return NodalDiagnosis(verdict, sigma, data.degree, results)


def _factors(f: Polynomial) -> Reducibility:
    _, factors = f.factor_list()
    if len(factors) > 1 or any(k > 1 for _, k in factors):
        return Reducibility.REDUCIBLE
    return Reducibility.IRREDUCIBLE_ASSUMED


def reducibility(ideal: Ideal, seed: int = 0) -> Reducibility:
    """
    Three-valued reducibility flag from a factorization over the rationals.

    Hypersurfaces are factored directly; curves are first projected to a plane.
    Anything else, and every positive-characteristic input, is UNKNOWN.
    """
    if ideal.ring.characteristic:
        return Reducibility.UNKNOWN
    saturated = saturate_irrelevant(ideal)
    generators = saturated.reduced_basis()
    if len(generators) == 1:
        return _factors(generators[0])
    if hilbert_data(saturated).dimension != 1:
        return Reducibility.UNKNOWN
    try:
        image, _ = project_variety(saturated, saturated.ring.n - 3, seed)
    except InvariantRegularityError as exc:
        logger.info("Reducibility undecided", extra={"reason": str(exc)})
        return Reducibility.UNKNOWN
    plane = image.reduced_basis()
    return _factors(plane[0]) if len(plane) == 1 else Reducibility.UNKNOWN
