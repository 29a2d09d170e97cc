"""
Seeded redraws for computations that are only correct for generic choices.

Draw k of a computation started with seed s uses seed s + k, so a run is
reproducible from the seed alone.
"""

import logging
from collections.abc import Callable
from typing import TypeVar

from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from src.errors import GenericityError, RedrawsExhaustedError
from src.observability.metrics import get_metrics

logger = logging.getLogger(__name__)

T = TypeVar("T")


def with_redraws(
    action: Callable[[int], T],
    seed: int,
    budget: int,
    exhausted: type[RedrawsExhaustedError] = RedrawsExhaustedError,
) -> T:
    """
    Run action(seed), action(seed + 1), ... until a draw raises no GenericityError.

    Args:
        action: Computation taking the seed of the current draw.
        seed: Seed of the first draw.
        budget: Maximum number of draws.
        exhausted: Error type raised when every draw failed.

    Raises:
        RedrawsExhaustedError: (or `exhausted`) carrying every failure.
    """
    failures: list[GenericityError] = []

    def attempt(draw_seed: int) -> T:
        try:
            return action(draw_seed)
        except GenericityError as exc:
            failures.append(exc)
            get_metrics().record_redraw(exc.stage)
            logger.info(
                "Generic draw rejected",
                extra={"stage": exc.stage, "seed": draw_seed, "detail": exc.detail},
            )
            raise

    try:
        for trial in Retrying(
            stop=stop_after_attempt(max(budget, 1)),
            retry=retry_if_exception_type(GenericityError),
            reraise=True,
        ):
            with trial:
                return attempt(seed + trial.retry_state.attempt_number - 1)
    except GenericityError:
        raise exhausted(failures) from None
    raise exhausted(failures)
