"""
ACM detection and Castelnuovo-Mumford regularity via Artinian reduction.
"""

from src.acm.reduction import (
    AcmDraw,
    AcmResult,
    ArtinianReduction,
    ZerodivisorWitness,
    acm_check,
    artinian_reduce,
    regularity_acm,
)

__all__ = [
    "AcmDraw",
    "AcmResult",
    "ArtinianReduction",
    "ZerodivisorWitness",
    "acm_check",
    "artinian_reduce",
    "regularity_acm",
]
