"""
Report type definitions for bound verdicts and corpus facts.
"""

from typing import Any

from pydantic import BaseModel, Field

from src.constants import ExitCode, HypothesisStatus, Reducibility, TheoremTag, Verdict


class HypothesisCheck(BaseModel):
    """One hypothesis of a bound and how it was established."""

    name: str
    status: HypothesisStatus
    detail: str | None = None

    @classmethod
    def verified(cls, name: str, detail: str | None = None) -> "HypothesisCheck":
        return cls(name=name, status=HypothesisStatus.VERIFIED, detail=detail)

    @classmethod
    def assumed(cls, name: str, detail: str | None = None) -> "HypothesisCheck":
        return cls(name=name, status=HypothesisStatus.ASSUMED, detail=detail)

    @classmethod
    def failed(cls, name: str, detail: str | None = None) -> "HypothesisCheck":
        return cls(name=name, status=HypothesisStatus.FAILED, detail=detail)

    @classmethod
    def from_test(cls, name: str, passed: bool, detail: str | None = None) -> "HypothesisCheck":
        """Verified or failed according to an exact test."""
        return cls.verified(name, detail) if passed else cls.failed(name, detail)


class BoundReport(BaseModel):
    """
    Outcome of checking one inequality on concrete inputs.

    The verdict is derived from the recorded integers; any failed hypothesis
    makes the report not applicable, never violated.
    """

    theorem: TheoremTag
    inequality: str
    inputs: dict[str, int] = Field(default_factory=dict)
    hypotheses: list[HypothesisCheck] = Field(default_factory=list)
    lhs: int | None = None
    rhs: int | None = None
    verdict: Verdict = Verdict.NOT_APPLICABLE
    reducibility: Reducibility = Reducibility.UNKNOWN
    characteristic_divides: bool = False
    seed: int = 0

    @classmethod
    def build(
        cls,
        theorem: TheoremTag,
        inequality: str,
        inputs: dict[str, int],
        hypotheses: list[HypothesisCheck],
        lhs: int | None,
        rhs: int | None,
        **extra: Any,
    ) -> "BoundReport":
        """Create a report, computing the verdict from lhs, rhs and the checklist."""
        if any(h.status == HypothesisStatus.FAILED for h in hypotheses) or lhs is None or rhs is None:
            verdict = Verdict.NOT_APPLICABLE
        elif lhs < rhs:
            verdict = Verdict.HOLDS_STRICT
        elif lhs == rhs:
            verdict = Verdict.HOLDS_EQUAL
        else:
            verdict = Verdict.VIOLATED
        return cls(
            theorem=theorem,
            inequality=inequality,
            inputs=inputs,
            hypotheses=hypotheses,
            lhs=lhs,
            rhs=rhs,
            verdict=verdict,
            **extra,
        )

    @property
    def applicable(self) -> bool:
        return self.verdict != Verdict.NOT_APPLICABLE

    @property
    def fully_verified(self) -> bool:
        return all(h.status == HypothesisStatus.VERIFIED for h in self.hypotheses)

    def failed_hypotheses(self) -> list[str]:
        return [h.name for h in self.hypotheses if h.status == HypothesisStatus.FAILED]

    @property
    def exit_code(self) -> ExitCode:
        if self.verdict in (Verdict.HOLDS_STRICT, Verdict.HOLDS_EQUAL):
            return ExitCode.AFFIRMATIVE
        if self.verdict == Verdict.VIOLATED:
            return ExitCode.NEGATIVE
        return ExitCode.INDETERMINATE


class ExpectedFacts(BaseModel):
    """Facts a corpus instance is expected to satisfy; None means not asserted."""

    invariant: bool | None = None
    degree: int | None = None
    field_degree: int | None = None
    acm: bool | None = None
    regularity: int | None = None
    q: int | None = None


class FactComparison(BaseModel):
    """An expected fact next to the value recomputed by the pipeline."""

    name: str
    expected: bool | int
    actual: bool | int | None
    detail: str | None = None

    @property
    def agrees(self) -> bool:
        return self.expected == self.actual
