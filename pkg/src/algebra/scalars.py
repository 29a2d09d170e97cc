"""
Exact scalar fields: the rationals in characteristic 0, the prime field GF(p) otherwise.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from src.errors import PreconditionError

Scalar = Any


@lru_cache
def field_for(characteristic: int) -> Domain:
    """
    Get the coefficient field of the given characteristic.

    Args:
        characteristic: 0 or a prime.

    Returns:
        QQ or GF(p).

    Raises:
        PreconditionError: If the characteristic is negative or not prime.
    """
    if characteristic == 0:
        return QQ
    if characteristic < 0 or not isprime(characteristic):
        raise PreconditionError(f"characteristic must be 0 or a prime, got {characteristic}")
    return GF(characteristic)


def characteristic_of(domain: Domain) -> int:
    """Characteristic of a coefficient field."""
    return int(domain.characteristic())


def scalar(domain: Domain, value: int | Fraction) -> Scalar:
    """
    Convert an integer or fraction into the field.

    Raises:
        PreconditionError: If the denominator is not invertible.
    """
    if isinstance(value, int):
        return domain.convert(value)
    p = characteristic_of(domain)
    if p == 0:
        return QQ(value.numerator, value.denominator)
    if value.denominator % p == 0:
        raise PreconditionError(f"{value.denominator} has no inverse in characteristic {p}")
    return domain.convert(value.numerator) / domain.convert(value.denominator)


def scalar_to_str(domain: Domain, value: Scalar) -> str:
    """Render a scalar canonically: reduced fraction in char 0, residue in 0..p-1 otherwise."""
    p = characteristic_of(domain)
    if p:
        return str(int(value) % p)
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def scalar_to_fraction(domain: Domain, value: Scalar) -> Fraction:
    """Scalar as a Fraction (the canonical residue in characteristic p)."""
    p = characteristic_of(domain)
    if p:
        return Fraction(int(value) % p)
    return Fraction(int(value.numerator), int(value.denominator))
