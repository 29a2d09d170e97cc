"""
Exact polynomial core: scalars, rings and orders, polynomials, coordinate changes.
"""

from src.algebra.coordinates import (
    CoordinateChange,
    apply_linear_change,
    linear_form,
    random_linear_forms,
)
from src.algebra.polynomial import (
    NEG_INF,
    degree,
    degree_and_homogeneity,
    euler_pairing,
    gradient,
    homogeneous_degree,
    is_homogeneous,
    partial_derivative,
    poly_arith,
)
from src.algebra.ring import GREVLEX, Monomial, MonomialOrder, Polynomial, Ring
from src.algebra.scalars import field_for, scalar, scalar_to_str

__all__ = [
    "CoordinateChange",
    "apply_linear_change",
    "linear_form",
    "random_linear_forms",
    "NEG_INF",
    "degree",
    "degree_and_homogeneity",
    "euler_pairing",
    "gradient",
    "homogeneous_degree",
    "is_homogeneous",
    "partial_derivative",
    "poly_arith",
    "GREVLEX",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "field_for",
    "scalar",
    "scalar_to_str",
]
