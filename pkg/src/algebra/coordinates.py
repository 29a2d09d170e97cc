"""
Linear changes of coordinates and seeded generic linear forms.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from src.algebra import linalg
from src.algebra.ring import Polynomial, Ring
from src.config import get_settings
from src.errors import IndependenceError, PreconditionError, SingularMatrixError

logger = logging.getLogger(__name__)

ScalarMatrix = tuple[tuple[Any, ...], ...]


def _as_matrix(ring: Ring, rows: Sequence[Sequence[Any]]) -> ScalarMatrix:
    size = ring.nvars
    if len(rows) != size or any(len(r) != size for r in rows):
        raise PreconditionError(f"expected a {size}x{size} matrix")
    return tuple(tuple(ring.domain.convert(c) for c in r) for r in rows)


def linear_form(ring: Ring, coefficients: Sequence[Any]) -> Polynomial:
    result = ring.zero
    for c, t in zip(coefficients, ring.gens, strict=True):
        if c:
            result += t * c
    return result


def apply_linear_change(f: Polynomial, matrix: Sequence[Sequence[Any]], ring: Ring) -> Polynomial:
    """
    Substitute t_i -> sum_j M[i][j] t_j simultaneously.

    Raises:
        SingularMatrixError: If M is not invertible.
    """
    m = _as_matrix(ring, matrix)
    if not linalg.determinant(m, ring.domain):
        raise SingularMatrixError("coordinate change matrix is singular")
    return _substitute(ring.element(f), m, ring)


def _substitute(f: Polynomial, matrix: ScalarMatrix, ring: Ring) -> Polynomial:
    if not f:
        return f
    images = [linear_form(ring, row) for row in matrix]
    return f.compose(list(zip(ring.gens, images, strict=True)))


def _draw(rng: np.random.Generator, ring: Ring, count: int, bound: int) -> list[list[int]]:
    p = ring.characteristic
    if p:
        values = rng.integers(0, p, size=(count, ring.nvars))
    else:
        values = rng.integers(-bound, bound, size=(count, ring.nvars), endpoint=True)
    return [[int(x) for x in row] for row in values]


def random_coefficient_rows(
    ring: Ring,
    seed: int,
    count: int,
    bound: int | None = None,
    retries: int | None = None,
) -> list[list[Any]]:
    """
    Coefficient rows of `count` independent random linear forms.

    Raises:
        PreconditionError: If count exceeds the number of variables.
        IndependenceError: If no independent draw occurred within the retry budget.
    """
    settings = get_settings()
    bound = settings.sample_bound if bound is None else bound
    retries = settings.independence_retries if retries is None else retries
    if not 0 <= count <= ring.nvars:
        raise PreconditionError(f"cannot draw {count} independent forms in {ring.nvars} variables")
    if count == 0:
        return []
    rng = np.random.default_rng(seed)
    for attempt in range(1, retries + 1):
        rows = [[ring.domain.convert(c) for c in row] for row in _draw(rng, ring, count, bound)]
        if linalg.rank(rows, ring.nvars, ring.domain) == count:
            return rows
        logger.debug("Dependent linear forms drawn", extra={"seed": seed, "attempt": attempt})
    raise IndependenceError(f"no independent draw of {count} forms after {retries} attempts")


def random_linear_forms(ring: Ring, seed: int, count: int, bound: int | None = None) -> list[Polynomial]:
    """Deterministic (given seed) list of linearly independent linear forms."""
    return [linear_form(ring, row) for row in random_coefficient_rows(ring, seed, count, bound)]


@dataclass(frozen=True)
class CoordinateChange:
    """
    New coordinates s = M t.

    A polynomial f(t) becomes f(M^-1 s); vector fields transform with M
    (see `VectorField.transformed`).
    """

    ring: Ring
    matrix: ScalarMatrix
    inverse: ScalarMatrix

    @classmethod
    def from_matrix(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> "CoordinateChange":
        m = _as_matrix(ring, rows)
        if not linalg.determinant(m, ring.domain):
            raise SingularMatrixError("coordinate change matrix is singular")
        inv = tuple(tuple(r) for r in linalg.inverse(m, ring.domain))
        return cls(ring, m, inv)

    @classmethod
    def identity(cls, ring: Ring) -> "CoordinateChange":
        one, zero = ring.domain.one, ring.domain.zero
        eye = tuple(
            tuple(one if i == j else zero for j in range(ring.nvars)) for i in range(ring.nvars)
        )
        return cls(ring, eye, eye)

    @classmethod
    def random(cls, ring: Ring, seed: int) -> "CoordinateChange":
        """A random invertible frame drawn from the seeded sample set."""
        return cls.from_matrix(ring, random_coefficient_rows(ring, seed, ring.nvars))

    @property
    def is_identity(self) -> bool:
        return self.matrix == self.inverse == CoordinateChange.identity(self.ring).matrix

    def polynomial(self, f: Polynomial) -> Polynomial:
        """Express f in the new coordinates."""
        return _substitute(self.ring.element(f), self.inverse, self.ring)

    def pullback(self, f: Polynomial) -> Polynomial:
        """Express a polynomial in the new coordinates back in the old ones."""
        return _substitute(self.ring.element(f), self.matrix, self.ring)
