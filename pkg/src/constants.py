"""
Application constants.
Centralized location for all constant values used across the application.
"""

from enum import IntEnum, StrEnum


class OrderKind(StrEnum):
    """Monomial order families."""

    GREVLEX = "grevlex"
    LEX = "lex"
    BLOCK = "block"


class Saturation(StrEnum):
    """Tri-state saturation flag carried by ideals."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class HypothesisStatus(StrEnum):
    """Status of one hypothesis in a bound report."""

    VERIFIED = "verified"
    ASSUMED = "assumed"
    FAILED = "failed"


class Verdict(StrEnum):
    """
    Outcome of an inequality check.

    A report with a failed hypothesis is NOT_APPLICABLE, never VIOLATED.
    """

    HOLDS_STRICT = "holds_strict"
    HOLDS_EQUAL = "holds_equal"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not_applicable"


class NodalVerdict(StrEnum):
    """Singularity type of a plane curve."""

    SMOOTH = "smooth"
    NODAL = "nodal"
    NOT_NODAL = "not_nodal"
    INDETERMINATE = "indeterminate"


class Reducibility(StrEnum):
    """Heuristic reducibility flag for equality clauses."""

    REDUCIBLE = "reducible"
    IRREDUCIBLE_ASSUMED = "irreducible_assumed"
    UNKNOWN = "unknown"


class TheoremTag(StrEnum):
    """Inequalities that can be checked."""

    THEOREM_1 = "1"
    THEOREM_1_STAR = "1star"
    COROLLARY_2 = "2"
    THEOREM_3 = "3"
    THEOREM_8 = "8"
    THEOREM_18 = "18"


class AcmOutcome(StrEnum):
    """Result of a single ACM draw."""

    PASS = "pass"
    ZERODIVISOR = "zerodivisor"
    DEGENERATE = "degenerate"


class ExitCode(IntEnum):
    """CLI exit codes; verdict codes are distinct from the input-error code."""

    AFFIRMATIVE = 0
    NEGATIVE = 1
    INDETERMINATE = 2
    INPUT_ERROR = 3


# Variables are always named t0..tn
VARIABLE_PREFIX = "t"

# Metrics names
METRIC_GROEBNER_BASES = "groebner_bases_total"
METRIC_SPAIR_REDUCTIONS = "spair_reductions_total"
METRIC_GROEBNER_DURATION = "groebner_duration_seconds"
METRIC_GENERICITY_REDRAWS = "genericity_redraws_total"
METRIC_VERDICTS = "verdicts_total"

# Trace span names
SPAN_ACM_CHECK = "acm_check"
SPAN_ARTINIAN_REDUCE = "artinian_reduce"
SPAN_PROJECT_VARIETY = "project_variety"
SPAN_PROJECT_FIELD = "project_field"
SPAN_BOUND_VERDICT = "bound_verdict"
SPAN_CLI_COMMAND = "cli_command"

# Redraw stages
STAGE_ACM = "acm"
STAGE_ARTINIAN = "artinian"
STAGE_CENTER = "center"
STAGE_DISTINGUISHED = "distinguished_variable"
STAGE_MULTIPLICATION = "multiplication_matrix"
STAGE_MULTIPLIER = "multiplier"
STAGE_SUBRING = "subring_express"
STAGE_DEGREE = "projected_degree"
STAGE_FIELD = "projected_field"
