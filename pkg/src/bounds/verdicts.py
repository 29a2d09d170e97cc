"""
Verdict checkers for degree and regularity bounds on invariant subschemes.

Each checker computes the integers of its inequality with the exact pipeline,
records every hypothesis as verified, assumed or failed, and never raises on
a failed hypothesis: that lands in the checklist and makes the report not
applicable.
"""

import logging
from collections.abc import Callable, Sequence
from functools import wraps
from math import prod

from src.acm.reduction import acm_check, regularity_acm
from src.algebra.polynomial import homogeneous_degree
from src.algebra.ring import Polynomial, Ring
from src.bounds.nodal import nodal_diagnostic, reducibility
from src.constants import (
    SPAN_BOUND_VERDICT,
    HypothesisStatus,
    NodalVerdict,
    Reducibility,
    TheoremTag,
)
from src.errors import InvariantRegularityError, PreconditionError
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal
from src.groebner.operations import ideal_quotient, saturate_irrelevant
from src.observability.metrics import get_metrics
from src.observability.tracing import create_span
from src.project.pipeline import project_variety
from src.types.reports import BoundReport, HypothesisCheck
from src.vfield.field import VectorField
from src.vfield.hypersurface import is_smooth_hypersurface
from src.vfield.invariance import (
    finite_field_singularities_on,
    invariance_check,
    singular_scheme,
)

logger = logging.getLogger(__name__)

REDUCED = "reduced"
CURVE = "curve"
NODES = "at_most_ordinary_nodes"
CONTAINED = "contained"
ACM = "arithmetically_cohen_macaulay"
TANGENT_SPACES = "tangent_spaces_small"
FINITE_SINGULARITIES = "finitely_many_field_singularities"
INVARIANT = "invariant"
NONZERO_FIELD = "nonzero_field"
NORMAL_CROSSINGS = "normal_crossings_projection"


def _nodal_check(curve: Ideal, seed: int) -> HypothesisCheck:
    """Nodality of a curve, decided directly in P^2 and on a plane projection otherwise."""
    ring = curve.ring
    if ring.n == 2:
        generators = curve.reduced_basis()
        if len(generators) != 1:
            return HypothesisCheck.failed(NODES, "plane curve ideal is not principal")
        diagnosis = nodal_diagnostic(generators[0], seed)
        if diagnosis.verdict == NodalVerdict.INDETERMINATE:
            return HypothesisCheck.assumed(NODES, "diagnostic indeterminate")
        return HypothesisCheck.from_test(NODES, diagnosis.at_most_nodes, diagnosis.verdict.value)
    try:
        image, _ = project_variety(curve, ring.n - 3, seed)
    except InvariantRegularityError as exc:
        return HypothesisCheck.assumed(NODES, f"no plane projection: {exc}")
    generators = image.reduced_basis()
    if len(generators) != 1:
        return HypothesisCheck.assumed(NODES, "plane projection is not a curve")
    diagnosis = nodal_diagnostic(generators[0], seed)
    if diagnosis.verdict == NodalVerdict.NOT_NODAL:
        return HypothesisCheck.failed(NODES, "plane projection has a singularity worse than a node")
    return HypothesisCheck.assumed(NODES, f"plane projection is {diagnosis.verdict.value}")


def _field_checks(ideal: Ideal, X: VectorField) -> list[HypothesisCheck]:
    checks = [HypothesisCheck.from_test(NONZERO_FIELD, not X.is_zero())]
    if X.is_zero():
        return checks
    checks.append(
        HypothesisCheck.from_test(FINITE_SINGULARITIES, finite_field_singularities_on(ideal, X))
    )
    checks.append(HypothesisCheck.from_test(INVARIANT, invariance_check(X, ideal).verdict))
    return checks


def _curve_check(data_dimension: int) -> HypothesisCheck:
    return HypothesisCheck.from_test(CURVE, data_dimension == 1, f"dimension {data_dimension}")


def _regularity(ideal: Ideal, seed: int, checks: list[HypothesisCheck]) -> int | None:
    """Regularity when the ACM test passes; the outcome is appended to `checks`."""
    try:
        result = acm_check(ideal, seed)
    except InvariantRegularityError as exc:
        checks.append(HypothesisCheck.assumed(ACM, f"undecided: {exc}"))
        return None
    checks.append(HypothesisCheck.from_test(ACM, result.is_acm))
    if not result.is_acm:
        return None
    try:
        return regularity_acm(ideal, seed)
    except InvariantRegularityError as exc:
        checks.append(HypothesisCheck.assumed("regularity", f"undecided: {exc}"))
        return None


def _equality_flags(ideal: Ideal, lhs: int | None, rhs: int | None, seed: int) -> Reducibility:
    if lhs is None or lhs != rhs:
        return Reducibility.UNKNOWN
    return reducibility(ideal, seed)


def _finish(kind: TheoremTag, report: BoundReport) -> BoundReport:
    get_metrics().record_verdict(kind.value, report.verdict.value)
    logger.info(
        "Bound checked",
        extra={
            "theorem": kind.value,
            "verdict": report.verdict.value,
            "lhs": report.lhs,
            "rhs": report.rhs,
            "failed": report.failed_hypotheses(),
        },
    )
    return report


def _traced(kind: TheoremTag) -> Callable[[Callable[..., BoundReport]], Callable[..., BoundReport]]:
    def decorator(func: Callable[..., BoundReport]) -> Callable[..., BoundReport]:
        @wraps(func)
        def wrapper(*args: object, **kwargs: object) -> BoundReport:
            with create_span(SPAN_BOUND_VERDICT, theorem=kind.value):
                return _finish(kind, func(*args, **kwargs))

        return wrapper

    return decorator


@_traced(TheoremTag.THEOREM_18)
def theorem18_verdict(C: Ideal, Cprime: Ideal, X: VectorField, seed: int = 0) -> BoundReport:
    """
    d <= m + e - r + 2 for a nodal curve C inside an ACM curve C' of degree e
    and regularity r, invariant under X of degree m.
    """
    C = saturate_irrelevant(C)
    Cprime = saturate_irrelevant(Cprime)
    data_c, data_cp = hilbert_data(C), hilbert_data(Cprime)
    checks = [HypothesisCheck.assumed(REDUCED), _curve_check(data_c.dimension)]
    checks.append(HypothesisCheck.from_test(CONTAINED, C.contains_ideal(Cprime), "C inside C'"))
    r = _regularity(Cprime, seed, checks)
    checks.append(HypothesisCheck.assumed(TANGENT_SPACES))
    if data_c.dimension == 1:
        checks.append(_nodal_check(C, seed))
    checks.extend(_field_checks(C, X))

    d, e, m = data_c.degree, data_cp.degree, X.degree
    rhs = None if r is None else m + e - r + 2
    inputs = {"d": d, "e": e, "m": m, "n": C.ring.n} | ({"r": r} if r is not None else {})
    p = C.ring.characteristic
    return BoundReport.build(
        TheoremTag.THEOREM_18,
        "d <= m + e - r + 2",
        inputs,
        checks,
        d,
        rhs,
        reducibility=_equality_flags(C, d, rhs, seed),
        characteristic_divides=bool(p and d % p == 0),
        seed=seed,
    )


@_traced(TheoremTag.THEOREM_1)
def theorem1_verdict(C: Ideal, X: VectorField, seed: int = 0) -> BoundReport:
    """r <= m + 2 for a nodal ACM curve of regularity r invariant under X."""
    C = saturate_irrelevant(C)
    data = hilbert_data(C)
    checks = [HypothesisCheck.assumed(REDUCED), _curve_check(data.dimension)]
    r = _regularity(C, seed, checks)
    if data.dimension == 1:
        checks.append(_nodal_check(C, seed))
    checks.extend(_field_checks(C, X))

    d, m = data.degree, X.degree
    inputs = {"d": d, "e": d, "m": m, "n": C.ring.n} | ({"r": r} if r is not None else {})
    p = C.ring.characteristic
    rhs = m + 2
    return BoundReport.build(
        TheoremTag.THEOREM_1,
        "r <= m + 2",
        inputs,
        checks,
        r,
        rhs,
        reducibility=_equality_flags(C, r, rhs, seed),
        characteristic_divides=bool(p and d % p == 0),
        seed=seed,
    )


@_traced(TheoremTag.COROLLARY_2)
def corollary2_verdict(
    degrees: Sequence[int], C: Ideal, X: VectorField, seed: int = 0
) -> BoundReport:
    """
    d_1 + ... + d_(n-1) <= m + n for a nodal complete intersection curve.

    Raises:
        PreconditionError: If the number of declared degrees is not n - 1.
    """
    n = C.ring.n
    if len(degrees) != n - 1 or any(d < 1 for d in degrees):
        raise PreconditionError(f"a curve in P^{n} is cut out by {n - 1} positive degrees")
    data = hilbert_data(C)
    intersection = (
        data.dimension == 1
        and len(C.generators) == n - 1
        and sorted(C.generator_degrees) == sorted(degrees)
    )
    checks = [
        HypothesisCheck.assumed(REDUCED),
        HypothesisCheck.from_test(
            "complete_intersection",
            intersection,
            f"generator degrees {list(C.generator_degrees)}, dimension {data.dimension}",
        ),
    ]
    C = saturate_irrelevant(C)
    if data.dimension == 1:
        checks.append(_nodal_check(C, seed))
    checks.extend(_field_checks(C, X))

    total, m = sum(degrees), X.degree
    p = C.ring.characteristic
    rhs = m + n
    return BoundReport.build(
        TheoremTag.COROLLARY_2,
        "d_1 + ... + d_(n-1) <= m + n",
        {"sum_d": total, "m": m, "n": n},
        checks,
        total,
        rhs,
        reducibility=_equality_flags(C, total, rhs, seed),
        characteristic_divides=bool(p and prod(degrees) % p == 0),
        seed=seed,
    )


@_traced(TheoremTag.THEOREM_3)
def theorem3_verdict(C: Ideal, Z: Ideal, H: Polynomial, X: VectorField, seed: int = 0) -> BoundReport:
    """
    d <= m + f(e - 1) - r + 3 for a nodal curve C on the ACM surface Z of
    degree e and regularity r, cut by the hypersurface H of degree f.
    """
    C = saturate_irrelevant(C)
    Z = saturate_irrelevant(Z)
    H = C.ring.element(H)
    data_c, data_z = hilbert_data(C), hilbert_data(Z)
    f = homogeneous_degree(H)
    checks = [HypothesisCheck.assumed(REDUCED), _curve_check(data_c.dimension)]
    checks.append(
        HypothesisCheck.from_test(
            CONTAINED, C.contains_ideal(Z) and C.contains(H), "C inside Z and V(H)"
        )
    )
    checks.append(
        HypothesisCheck.from_test("surface", data_z.dimension == 2, f"dimension {data_z.dimension}")
    )
    r = _regularity(Z, seed, checks)
    checks.append(
        HypothesisCheck.from_test(
            "hypersurface_avoids_components", ideal_quotient(Z, H) == Z, "(Z : H) = Z"
        )
    )
    checks.append(HypothesisCheck.assumed("hypersurface_meets_finitely_many_surface_singularities"))
    if data_c.dimension == 1:
        checks.append(_nodal_check(C, seed))
    checks.extend(_field_checks(C, X))

    d, e, m = data_c.degree, data_z.degree, X.degree
    rhs = None if r is None else m + f * (e - 1) - r + 3
    inputs = {"d": d, "e": e, "f": f, "m": m, "n": C.ring.n} | ({"r": r} if r is not None else {})
    p = C.ring.characteristic
    return BoundReport.build(
        TheoremTag.THEOREM_3,
        "d <= m + f(e - 1) - r + 3",
        inputs,
        checks,
        d,
        rhs,
        reducibility=_equality_flags(C, d, rhs, seed),
        characteristic_divides=bool(p and d % p == 0),
        seed=seed,
    )


@_traced(TheoremTag.THEOREM_1_STAR)
def theorem1star_verdict(V: Ideal, X: VectorField, s: int, seed: int = 0) -> BoundReport:
    """
    r <= m + s + 1 for a reduced ACM subscheme of dimension s, in characteristic 0.

    Raises:
        PreconditionError: In positive characteristic.
    """
    if V.ring.characteristic:
        raise PreconditionError("this bound is only stated in characteristic 0")
    V = saturate_irrelevant(V)
    data = hilbert_data(V)
    checks = [
        HypothesisCheck.assumed(REDUCED),
        HypothesisCheck.from_test("dimension", data.dimension == s, f"dimension {data.dimension}"),
    ]
    r = _regularity(V, seed, checks)
    if s == 1 and data.dimension == 1:
        evidence = _nodal_check(V, seed)
        if evidence.status == HypothesisStatus.FAILED:
            checks.append(HypothesisCheck.failed(NORMAL_CROSSINGS, evidence.detail))
        else:
            checks.append(HypothesisCheck.assumed(NORMAL_CROSSINGS, evidence.detail))
    else:
        checks.append(HypothesisCheck.assumed(NORMAL_CROSSINGS))
    checks.append(HypothesisCheck.from_test(NONZERO_FIELD, not X.is_zero()))
    if not X.is_zero():
        meets = hilbert_data(V + singular_scheme(X)).dimension
        checks.append(
            HypothesisCheck.from_test(
                "components_meet_nonsingular_points", meets < data.dimension, f"dimension {meets}"
            )
        )
        checks.append(HypothesisCheck.from_test(INVARIANT, invariance_check(X, V).verdict))

    m = X.degree
    inputs = {"d": data.degree, "m": m, "s": s, "n": V.ring.n} | ({"r": r} if r is not None else {})
    return BoundReport.build(
        TheoremTag.THEOREM_1_STAR, "r <= m + s + 1", inputs, checks, r, m + s + 1, seed=seed
    )


@_traced(TheoremTag.THEOREM_8)
def theorem8_verdict(F: Polynomial, X: VectorField, seed: int = 0) -> BoundReport:
    """d <= m + 1 for a smooth hypersurface V(F) of degree d, p not dividing d."""
    ring = Ring.of(F)
    F = ring.element(F)
    d = homogeneous_degree(F)
    p = ring.characteristic
    checks = [
        HypothesisCheck.from_test("smooth", is_smooth_hypersurface(F)),
        HypothesisCheck.from_test("characteristic_coprime_to_degree", not (p and d % p == 0)),
        HypothesisCheck.from_test(NONZERO_FIELD, not X.is_zero()),
    ]
    if not X.is_zero():
        checks.append(HypothesisCheck.from_test(INVARIANT, invariance_check(X, Ideal(ring, [F])).verdict))
    m = X.degree
    return BoundReport.build(
        TheoremTag.THEOREM_8,
        "d <= m + 1",
        {"d": d, "m": m, "n": ring.n},
        checks,
        d,
        m + 1,
        characteristic_divides=bool(p and d % p == 0),
        seed=seed,
    )
