"""
Domain exceptions.

Every exception carries the CLI exit code it maps to, so the command layer
never has to guess whether a failure was bad input or an inconclusive draw.
"""

from src.constants import ExitCode


class InvariantRegularityError(Exception):
    """Base class for all library errors."""

    exit_code: ExitCode = ExitCode.INPUT_ERROR


class InputError(InvariantRegularityError):
    """Malformed command-line or problem-file input."""


class RingMismatchError(InvariantRegularityError):
    """Operands live in different polynomial rings."""


class SingularMatrixError(InvariantRegularityError):
    """A coordinate change matrix is not invertible."""


class NotHomogeneousError(InvariantRegularityError):
    """A polynomial required to be homogeneous is not."""


class ZeroFieldError(InvariantRegularityError):
    """The vector field is zero modulo the radial field."""


class PreconditionError(InvariantRegularityError):
    """An operation was called outside its domain."""


class InvariantHyperplaneError(InvariantRegularityError):
    """The hyperplane is left invariant, so the tangency divisor is undefined."""


class ParseError(InputError):
    """Syntax or validation error in a problem file."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class IndependenceError(InvariantRegularityError):
    """Could not draw linearly independent linear forms within the retry budget."""

    exit_code = ExitCode.INDETERMINATE


class GenericityError(InvariantRegularityError):
    """A random draw landed in the bad locus; a redraw may succeed."""

    exit_code = ExitCode.INDETERMINATE

    def __init__(self, stage: str, detail: str, seed: int | None = None) -> None:
        super().__init__(f"{stage}: {detail}" + (f" (seed {seed})" if seed is not None else ""))
        self.stage = stage
        self.detail = detail
        self.seed = seed


class IndeterminateError(InvariantRegularityError):
    """Random draws disagreed; no verdict can be certified."""

    exit_code = ExitCode.INDETERMINATE


class RedrawsExhaustedError(InvariantRegularityError):
    """Every draw in the retry budget landed in the bad locus."""

    exit_code = ExitCode.INDETERMINATE
    action = "computation"

    def __init__(self, failures: list[GenericityError]) -> None:
        summary = "; ".join(str(f) for f in failures) or "no draws attempted"
        super().__init__(f"{self.action} failed after {len(failures)} draws: {summary}")
        self.failures = failures


class ProjectionFailedError(RedrawsExhaustedError):
    """Every center in the retry budget failed post-hoc validation."""

    action = "projection"
