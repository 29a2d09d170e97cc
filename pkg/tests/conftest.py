"""
Pytest configuration and shared fixtures.
"""

from collections.abc import Generator

import pytest

from src.algebra.ring import Ring
from src.config import get_settings
from src.groebner.ideal import Ideal
from src.vfield.field import VectorField

TWISTED_CUBIC_PROBLEM = """\
# twisted cubic and its diagonal field
char 0
ring t0..t3
ideal C = t1*t2 - t0*t3, t1^2 - t0*t2, t2^2 - t1*t3
field X = [3*t0, t1, -t2, -3*t3]
"""


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None]:
    """Clear the settings cache around every test so env overrides apply."""
    monkeypatch.delenv("METRICS_FILE", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def p2() -> Ring:
    """k[t0, t1, t2] over the rationals."""
    return Ring.projective(2)


@pytest.fixture
def p3() -> Ring:
    """k[t0..t3] over the rationals."""
    return Ring.projective(3)


@pytest.fixture
def twisted_cubic(p3: Ring) -> Ideal:
    """The twisted cubic (s^3 : s^2 u : s u^2 : u^3)."""
    t0, t1, t2, t3 = p3.gens
    return Ideal(p3, [t1 * t2 - t0 * t3, t1**2 - t0 * t2, t2**2 - t1 * t3], name="C")


@pytest.fixture
def x3(p3: Ring) -> VectorField:
    """3 t0 d0 + t1 d1 - t2 d2 - 3 t3 d3, leaving the twisted cubic invariant."""
    t0, t1, t2, t3 = p3.gens
    return VectorField.of(p3, [3 * t0, t1, -t2, -3 * t3], name="X")


@pytest.fixture
def two_points(p2: Ring) -> Ideal:
    """The points (1 : 1 : 1) and (1 : -1 : 1)."""
    t0, t1, t2 = p2.gens
    return Ideal(p2, [t0 - t2, t1**2 - t2**2], name="P")


@pytest.fixture
def two_point_field(p2: Ring) -> VectorField:
    """t1 d0 + t0 d1 + t1 d2, leaving the two points invariant."""
    t0, t1, _ = p2.gens
    return VectorField.of(p2, [t1, t0, t1], name="X")


@pytest.fixture
def twisted_cubic_text() -> str:
    return TWISTED_CUBIC_PROBLEM
