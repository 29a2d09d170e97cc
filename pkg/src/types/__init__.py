"""
Type definitions for invariant-regularity.
Contains report and context types shared by the library and the CLI.
"""

from src.types.command import CommandContext, CommandReport
from src.types.reports import (
    BoundReport,
    ExpectedFacts,
    FactComparison,
    HypothesisCheck,
)

__all__ = [
    # Bound reports
    "BoundReport",
    "HypothesisCheck",
    # Corpus facts
    "ExpectedFacts",
    "FactComparison",
    # CLI types
    "CommandContext",
    "CommandReport",
]
