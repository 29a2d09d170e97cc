"""
Central projection of ACM schemes and of vector fields leaving them invariant.
"""

from src.project.matrix import (
    MultiplicationMatrix,
    cofactors,
    eliminant_D,
    express_in_basis,
    multiplication_matrix,
    multiplier_B,
    subring_express,
)
from src.project.pipeline import ProjectionCertificate, project_field, project_variety

__all__ = [
    "MultiplicationMatrix",
    "cofactors",
    "eliminant_D",
    "express_in_basis",
    "multiplication_matrix",
    "multiplier_B",
    "subring_express",
    "ProjectionCertificate",
    "project_field",
    "project_variety",
]
