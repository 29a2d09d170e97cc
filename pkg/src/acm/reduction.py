"""
Arithmetically Cohen-Macaulay detection and regularity by generic Artinian reduction.

For a saturated homogeneous J with affine cone of dimension c, S/J is
Cohen-Macaulay iff c generic linear forms are a regular sequence on it. The
quotient by such forms is Artinian with a monomial basis M_1..M_e of degrees
w_1..w_e, and the regularity of J is max(w_i) + 1.
"""

import logging
from dataclasses import dataclass, field

from tenacity import Retrying, retry_if_result, stop_after_attempt

from src.algebra.coordinates import random_linear_forms
from src.algebra.genericity import with_redraws
from src.algebra.ring import Monomial, Polynomial
from src.config import get_settings
from src.constants import SPAN_ACM_CHECK, SPAN_ARTINIAN_REDUCE, STAGE_ACM, STAGE_ARTINIAN, AcmOutcome
from src.errors import GenericityError, IndeterminateError, PreconditionError
from src.groebner.hilbert import hilbert_data, standard_monomials
from src.groebner.ideal import Ideal
from src.groebner.operations import ideal_quotient, saturate_irrelevant
from src.observability.metrics import get_metrics
from src.observability.tracing import create_span

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZerodivisorWitness:
    """g * form lies in the partial quotient ideal while g does not."""

    step: int
    form: Polynomial
    element: Polynomial


@dataclass(frozen=True)
class AcmDraw:
    """One random draw of the regular-sequence test."""

    seed: int
    forms: tuple[Polynomial, ...]
    outcome: AcmOutcome
    witness: ZerodivisorWitness | None = None


@dataclass(frozen=True)
class AcmResult:
    """
    Verdict of the ACM test with every draw that led to it.

    Attributes:
        is_acm: True iff some draw gave a regular sequence.
        ideal: The saturated ideal tested.
        draws: Draws in the order they were made.
        witness: For a negative verdict, a zerodivisor witness from the last draw.
    """

    is_acm: bool
    ideal: Ideal
    draws: tuple[AcmDraw, ...]
    witness: ZerodivisorWitness | None = None

    @property
    def seed(self) -> int | None:
        """Seed of the successful draw."""
        return self.draws[-1].seed if self.is_acm else None

    @property
    def forms(self) -> tuple[Polynomial, ...]:
        return self.draws[-1].forms if self.is_acm else ()


@dataclass(frozen=True)
class ArtinianReduction:
    """
    The Artinian quotient S/(J + forms) with its graded monomial basis.

    The basis is sorted by ascending degree (grevlex within a degree), so the
    first element is 1 and the last has degree r - 1.
    """

    ideal: Ideal
    forms: tuple[Polynomial, ...]
    seed: int | None
    reduced: Ideal
    basis: tuple[Monomial, ...]
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(sum(m) for m in self.basis))

    @property
    def multiplicity(self) -> int:
        return len(self.basis)

    @property
    def regularity(self) -> int:
        return max(self.degrees) + 1

    def basis_polynomials(self) -> list[Polynomial]:
        return [self.ideal.ring.monomial(m) for m in self.basis]


def _proper_saturated(J: Ideal) -> Ideal:
    if not J.is_homogeneous:
        raise PreconditionError("ideal must be homogeneous")
    saturated = saturate_irrelevant(J)
    if saturated.is_unit:
        raise PreconditionError("ideal defines the empty scheme")
    return saturated


def _cone_dimension(J: Ideal) -> int:
    return hilbert_data(J).cone_dimension


def _acm_draw(J: Ideal, seed: int, count: int) -> AcmDraw:
    forms = tuple(random_linear_forms(J.ring, seed, count))
    if not hilbert_data(J + forms).is_empty:
        return AcmDraw(seed, forms, AcmOutcome.DEGENERATE)
    partial = J
    for step, form in enumerate(forms):
        quotient = ideal_quotient(partial, form)
        if quotient != partial:
            element = next(g for g in quotient.generators if not partial.contains(g))
            return AcmDraw(
                seed, forms, AcmOutcome.ZERODIVISOR, ZerodivisorWitness(step, form, element)
            )
        partial = partial + [form]
    return AcmDraw(seed, forms, AcmOutcome.PASS)


def acm_check(J: Ideal, seed: int, budget: int | None = None) -> AcmResult:
    """
    Test whether S/J is Cohen-Macaulay with generic regular sequences.

    A single passing draw proves the ACM property. Non-ACM is concluded only if
    every draw in the budget exhibits a zerodivisor.

    Raises:
        PreconditionError: If J is inhomogeneous or defines the empty scheme.
        IndeterminateError: If the budget ran out on a mix of degenerate and
            zerodivisor draws.
    """
    budget = get_settings().acm_retry_budget if budget is None else budget
    saturated = _proper_saturated(J)
    count = _cone_dimension(saturated)
    draws: list[AcmDraw] = []

    def draw() -> AcmDraw:
        result = _acm_draw(saturated, seed + len(draws), count)
        draws.append(result)
        if result.outcome != AcmOutcome.PASS:
            get_metrics().record_redraw(STAGE_ACM)
        return result

    with create_span(SPAN_ACM_CHECK, seed=seed, forms=count):
        retrying = Retrying(
            stop=stop_after_attempt(max(budget, 1)),
            retry=retry_if_result(lambda d: d.outcome != AcmOutcome.PASS),
            retry_error_callback=lambda state: state.outcome.result(),
        )
        last = retrying(draw)

    outcomes = {d.outcome for d in draws}
    logger.info(
        "ACM check finished",
        extra={"seed": seed, "draws": len(draws), "outcome": last.outcome.value},
    )
    if last.outcome == AcmOutcome.PASS:
        return AcmResult(True, saturated, tuple(draws))
    if outcomes == {AcmOutcome.ZERODIVISOR}:
        return AcmResult(False, saturated, tuple(draws), last.witness)
    raise IndeterminateError(
        f"ACM test inconclusive after {len(draws)} draws: "
        + ", ".join(d.outcome.value for d in draws)
    )


def artinian_reduce(
    J: Ideal,
    seed: int,
    forms: tuple[Polynomial, ...] | None = None,
) -> ArtinianReduction:
    """
    Cut an ACM ideal down to an Artinian one and read off its monomial basis.

    Args:
        J: Saturated ACM ideal.
        seed: Seed of the linear forms when `forms` is not given.
        forms: Explicit forms (their number must be the cone dimension).

    Raises:
        GenericityError: If the forms do not give a finite quotient of the
            expected length.
    """
    saturated = _proper_saturated(J)
    expected = hilbert_data(saturated)
    if forms is None:
        forms = tuple(random_linear_forms(saturated.ring, seed, expected.cone_dimension))
    with create_span(SPAN_ARTINIAN_REDUCE, seed=seed, forms=len(forms)):
        reduced = saturated + forms
        if not hilbert_data(reduced).is_empty:
            raise GenericityError(STAGE_ARTINIAN, "linear forms meet the scheme", seed)
        basis = tuple(standard_monomials(reduced))
    if len(basis) != expected.degree:
        raise GenericityError(
            STAGE_ARTINIAN,
            f"quotient has length {len(basis)}, degree is {expected.degree}",
            seed,
        )
    reduction = ArtinianReduction(saturated, tuple(forms), seed, reduced, basis)
    logger.debug(
        "Artinian reduction computed",
        extra={"seed": seed, "e": reduction.multiplicity, "r": reduction.regularity},
    )
    return reduction


def regularity_acm(J: Ideal, seed: int) -> int:
    """
    Castelnuovo-Mumford regularity of an ACM ideal.

    The value is confirmed on further seeds; the zero ideal (all of P^n) has
    regularity 1.

    Raises:
        PreconditionError: If J is not ACM.
        IndeterminateError: If confirmation draws disagree.
        RedrawsExhaustedError: If no draw gives an Artinian reduction.
    """
    settings = get_settings()
    result = acm_check(J, seed)
    if not result.is_acm:
        raise PreconditionError("regularity is only computed for ACM ideals")
    assert result.seed is not None
    first = artinian_reduce(result.ideal, result.seed, result.forms)
    for k in range(settings.regularity_confirm_draws):
        again = with_redraws(
            lambda s: artinian_reduce(result.ideal, s),
            result.seed + 1 + k * settings.acm_retry_budget,
            settings.acm_retry_budget,
        )
        if again.regularity != first.regularity:
            raise IndeterminateError(
                f"regularity {first.regularity} at seed {result.seed}, "
                f"{again.regularity} at seed {again.seed}"
            )
    return first.regularity
