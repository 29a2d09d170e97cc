"""
Generic central projection of a scheme and of a vector field leaving it invariant.

In coordinates where the center L is V(t_0..t_N), N = n - l - 1, the projection
is (t_0 : ... : t_N). A random coordinate change makes the center generic;
every genericity condition is checked on its observable consequences and a
failed draw is repeated with the next seed.
"""

import logging
from dataclasses import dataclass, field

from src.acm.reduction import ArtinianReduction, acm_check, artinian_reduce
from src.algebra.coordinates import CoordinateChange
from src.algebra.genericity import with_redraws
from src.algebra.polynomial import degree, proportional
from src.algebra.ring import Polynomial, Ring
from src.config import get_settings
from src.constants import SPAN_PROJECT_FIELD, SPAN_PROJECT_VARIETY, STAGE_CENTER, STAGE_DEGREE, STAGE_FIELD
from src.errors import GenericityError, PreconditionError, ProjectionFailedError, ZeroFieldError
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal
from src.groebner.operations import elimination_ideal, saturate_irrelevant, saturation_wrt
from src.observability.tracing import create_span
from src.project.matrix import MultiplicationMatrix, multiplication_matrix, multiplier_B, subring_express
from src.vfield.field import VectorField
from src.vfield.invariance import invariance_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectionCertificate:
    """
    Everything computed while projecting a field from a center of dimension l.

    All polynomials before `projected_ideal` live in the full ring in the new
    coordinates; the projected ideals and field live on P^N.
    """

    ell: int
    seed: int | None
    change: CoordinateChange
    reduction: ArtinianReduction
    matrix: MultiplicationMatrix
    eliminant: Polynomial
    multiplier: Polynomial
    subring_images: tuple[Polynomial, ...]
    projected_ideal: Ideal
    projected_variety: Ideal
    field: VectorField
    used_fallback: bool = False
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def multiplicity(self) -> int:
        return self.reduction.multiplicity

    @property
    def regularity(self) -> int:
        return self.reduction.regularity

    @property
    def cofactors(self) -> tuple[Polynomial, ...]:
        return self.matrix.cofactors

    @property
    def verified(self) -> bool:
        required = (
            "multiplication_identities",
            "eliminant_in_ideal",
            "eliminant_monic",
            "multiplier_outside_ideal",
            "subring_identities",
            "field_nonzero",
            "field_invariant",
            "field_degree",
        )
        return all(self.flags.get(name, False) for name in required)


def _distinguished_index(ring: Ring, ell: int) -> int:
    if not 0 <= ell <= ring.n - 2:
        raise PreconditionError(f"center dimension must be in 0..{ring.n - 2}, got {ell}")
    return ring.n - ell - 1


def _center_generators(ring: Ring, N: int) -> tuple[Polynomial, ...]:
    return ring.gens[: N + 1]


def _project(ideal: Ideal, change: CoordinateChange, N: int, seed: int | None) -> tuple[Ideal, Ideal]:
    """Moved ideal and its elimination ideal on P^N, checking center and degree."""
    moved = ideal.transformed(change)
    ring = moved.ring
    if not hilbert_data(moved + _center_generators(ring, N)).is_empty:
        raise GenericityError(STAGE_CENTER, "center meets the scheme", seed)
    image = elimination_ideal(moved, N + 1).restricted(N + 1)
    before, after = hilbert_data(moved).degree, hilbert_data(image).degree
    if before != after:
        raise GenericityError(STAGE_DEGREE, f"projection has degree {after}, expected {before}", seed)
    return moved, image


def project_variety(
    ideal: Ideal,
    ell: int,
    seed: int,
    budget: int | None = None,
) -> tuple[Ideal, CoordinateChange]:
    """
    Project V(I) from a generic center of dimension l to P^(n-l-1).

    Returns:
        The ideal of the image in k[t_0..t_N] and the coordinate change used.

    Raises:
        PreconditionError: If l is out of range or V(I) is too large to project
            birationally.
        ProjectionFailedError: If every center in the budget failed.
    """
    ring = ideal.ring
    N = _distinguished_index(ring, ell)
    saturated = saturate_irrelevant(ideal)
    if hilbert_data(saturated).dimension >= N:
        raise PreconditionError(f"a scheme of dimension >= {N} does not project birationally to P^{N}")
    budget = get_settings().projection_retry_budget if budget is None else budget

    def draw(s: int) -> tuple[Ideal, CoordinateChange]:
        change = CoordinateChange.random(ring, s)
        _, image = _project(saturated, change, N, s)
        return image, change

    with create_span(SPAN_PROJECT_VARIETY, ell=ell, seed=seed):
        image, change = with_redraws(draw, seed, budget, ProjectionFailedError)
    logger.info("Variety projected", extra={"ell": ell, "seed": seed, "degree": hilbert_data(image).degree})
    return image, change


def _check_preconditions(X: VectorField, V: Ideal, W: Ideal, ell: int, seed: int) -> Ideal:
    ring = X.ring
    if V.ring != ring or W.ring != ring:
        raise PreconditionError("field and ideals live on different projective spaces")
    if X.is_zero():
        raise ZeroFieldError("cannot project the zero field")
    _distinguished_index(ring, ell)
    W = saturate_irrelevant(W)
    data = hilbert_data(W)
    if data.is_empty or ring.n - data.dimension != ell + 2:
        raise PreconditionError(f"W must have codimension {ell + 2}, got {ring.n - data.dimension}")
    if not saturate_irrelevant(V).contains_ideal(W):
        raise PreconditionError("V must be contained in W")
    if not acm_check(W, seed).is_acm:
        raise PreconditionError("W is not arithmetically Cohen-Macaulay")
    if not invariance_check(X, V).verdict:
        raise PreconditionError("the field does not leave V invariant")
    return W


def _fallback_field(small: Ring, B: Polynomial, m: int) -> VectorField:
    """The field B t_0^m d_0."""
    head = small.element(B) * small.gens[0] ** m
    return VectorField.of(small, [head] + [small.zero] * small.n, degree=degree(B) + m)


def _vanishes_on(f: Polynomial, ideal: Ideal) -> bool:
    """True iff V(I) lies in V(f), i.e. (I : f^inf) has empty scheme."""
    return hilbert_data(saturation_wrt(ideal, f)).is_empty


def _project_once(
    X: VectorField, V: Ideal, W: Ideal, ell: int, change: CoordinateChange, seed: int | None
) -> ProjectionCertificate:
    ring = X.ring
    N = ring.n - ell - 1
    small = ring.truncated(N + 1)
    flags: dict[str, bool] = {"center_disjoint": True, "degree_preserved": True}

    moved_w, image_w = _project(W, change, N, seed)
    moved_v = V.transformed(change)
    image_v = elimination_ideal(moved_v, N + 1).restricted(N + 1)
    moved_x = X.transformed(change)

    red = artinian_reduce(moved_w, seed if seed is not None else 0, _center_generators(ring, N)[:N])
    A = multiplication_matrix(red)
    J = red.ideal
    basis = red.basis_polynomials()
    t = ring.gens[N]
    flags["multiplication_identities"] = all(
        J.contains(t * m - sum((a * mj for a, mj in zip(row, basis, strict=True)), ring.zero))
        for m, row in zip(basis, A.entries, strict=True)
    )

    D = A.eliminant
    flags["eliminant_in_ideal"] = J.contains(D)
    flags["eliminant_monic"] = degree(D) == red.multiplicity and (
        D.coeff(t**red.multiplicity) == ring.domain.one
    )
    generators = image_w.reduced_basis()
    flags["eliminant_generates"] = len(generators) == 1 and proportional(
        small.element(D), generators[0]
    )

    B = multiplier_B(A, red)
    flags["multiplier_outside_ideal"] = True
    images = tuple(subring_express(g, red, A) for g in moved_x.coefficients)
    flags["subring_identities"] = True

    target_degree = X.degree + red.multiplicity - red.regularity
    projected = VectorField.of(
        small, [small.element(g) for g in images[: N + 1]], degree=target_degree
    )
    used_fallback = False
    if projected.is_zero():
        if not _vanishes_on(small.element(B), image_v):
            raise GenericityError(STAGE_FIELD, "projected field is zero", seed)
        projected = _fallback_field(small, B, X.degree)
        used_fallback = True
    if not invariance_check(projected, image_v).verdict:
        raise GenericityError(STAGE_FIELD, "projected field is not invariant", seed)

    flags["field_nonzero"] = not projected.is_zero()
    flags["field_invariant"] = True
    flags["field_degree"] = projected.degree == target_degree
    return ProjectionCertificate(
        ell=ell,
        seed=seed,
        change=change,
        reduction=red,
        matrix=A,
        eliminant=D,
        multiplier=B,
        subring_images=images,
        projected_ideal=image_v,
        projected_variety=image_w,
        field=projected,
        used_fallback=used_fallback,
        flags=flags,
    )


def project_field(
    X: VectorField,
    V: Ideal,
    W: Ideal,
    ell: int,
    seed: int,
    coordinate_change: CoordinateChange | None = None,
    budget: int | None = None,
) -> ProjectionCertificate:
    """
    Project a field leaving V invariant from a generic center of dimension l.

    W contains V, is ACM of codimension l + 2, of degree e and regularity r.
    The result is a nonzero field of degree m + e - r on P^(n-l-1) leaving the
    projection of V invariant.

    Args:
        X: Field of degree m leaving V invariant.
        V: Ideal of the invariant scheme.
        W: Ideal of the ACM scheme containing V.
        ell: Dimension of the center.
        seed: Seed of the first center.
        coordinate_change: Fixed coordinates (no redraws) instead of random ones.
        budget: Number of centers to try.

    Raises:
        PreconditionError: If an input hypothesis fails.
        ProjectionFailedError: If every center in the budget failed.
    """
    W = _check_preconditions(X, V, W, ell, seed)
    settings = get_settings()
    budget = settings.projection_retry_budget if budget is None else budget

    with create_span(SPAN_PROJECT_FIELD, ell=ell, seed=seed, degree=X.degree):
        if coordinate_change is not None:
            certificate = with_redraws(
                lambda _: _project_once(X, V, W, ell, coordinate_change, None),
                seed,
                1,
                ProjectionFailedError,
            )
        else:
            certificate = with_redraws(
                lambda s: _project_once(X, V, W, ell, CoordinateChange.random(X.ring, s), s),
                seed,
                budget,
                ProjectionFailedError,
            )
    logger.info(
        "Field projected",
        extra={
            "ell": ell,
            "seed": certificate.seed,
            "e": certificate.multiplicity,
            "r": certificate.regularity,
            "degree": certificate.field.degree,
            "fallback": certificate.used_fallback,
        },
    )
    return certificate
