"""
Vector fields on P^n and the invariance of projective schemes.
"""

from src.vfield.field import VectorField, is_zero_field
from src.vfield.hypersurface import (
    KoszulMatrix,
    is_smooth_hypersurface,
    koszul_decompose,
    min_invariant_degree,
    minimal_invariant_field,
    remark14_field,
    trivial_field,
)
from src.vfield.invariance import (
    GeneratorCheck,
    InvarianceCertificate,
    finite_field_singularities_on,
    invariance_check,
    singular_scheme,
    tangency_degree,
)

__all__ = [
    "VectorField",
    "is_zero_field",
    "KoszulMatrix",
    "is_smooth_hypersurface",
    "koszul_decompose",
    "min_invariant_degree",
    "minimal_invariant_field",
    "remark14_field",
    "trivial_field",
    "GeneratorCheck",
    "InvarianceCertificate",
    "finite_field_singularities_on",
    "invariance_check",
    "singular_scheme",
    "tangency_degree",
]
