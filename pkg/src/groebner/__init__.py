"""
Groebner basis engine: completion, membership, elimination, quotients, Hilbert data.
"""

from src.groebner.basis import GroebnerBasis, MembershipWitness, buchberger, normal_form
from src.groebner.hilbert import (
    HilbertData,
    graded_piece_basis,
    hilbert_data,
    hilbert_function,
    standard_monomials,
)
from src.groebner.ideal import Ideal, ideal_membership
from src.groebner.operations import (
    elimination_ideal,
    ideal_quotient,
    intersect,
    saturate_irrelevant,
    saturation_wrt,
)

__all__ = [
    "GroebnerBasis",
    "MembershipWitness",
    "buchberger",
    "normal_form",
    "HilbertData",
    "graded_piece_basis",
    "hilbert_data",
    "hilbert_function",
    "standard_monomials",
    "Ideal",
    "ideal_membership",
    "elimination_ideal",
    "ideal_quotient",
    "intersect",
    "saturate_irrelevant",
    "saturation_wrt",
]
