"""
Exact linear algebra over the coefficient field (and determinants over
polynomial rings), delegated to sympy's DomainMatrix.
"""

from collections.abc import Sequence
from typing import Any

from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

Row = Sequence[Any]


def to_domain_matrix(rows: Sequence[Row], ncols: int, domain: Domain) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), domain)


def rank(rows: Sequence[Row], ncols: int, domain: Domain) -> int:
    if not rows or ncols == 0:
        return 0
    return int(to_domain_matrix(rows, ncols, domain).rank())


def determinant(rows: Sequence[Row], domain: Domain) -> Any:
    """Determinant of a square matrix; the empty matrix has determinant one."""
    size = len(rows)
    if size == 0:
        return domain.one
    return to_domain_matrix(rows, size, domain).det()


def inverse(rows: Sequence[Row], domain: Domain) -> list[list[Any]]:
    size = len(rows)
    inv = to_domain_matrix(rows, size, domain).inv()
    return [list(r) for r in inv.to_list()]


def _rref(rows: Sequence[Row], ncols: int, domain: Domain) -> tuple[list[list[Any]], tuple[int, ...]]:
    reduced, pivots = to_domain_matrix(rows, ncols, domain).rref()
    return [list(r) for r in reduced.to_list()], tuple(pivots)


def solve(rows: Sequence[Row], rhs: Row, ncols: int, domain: Domain) -> list[Any] | None:
    """
    Solve A x = b.

    Returns:
        One solution (free unknowns set to zero), or None if inconsistent.
    """
    if not rows:
        return [domain.zero] * ncols
    augmented = [list(r) + [b] for r, b in zip(rows, rhs, strict=True)]
    reduced, pivots = _rref(augmented, ncols + 1, domain)
    if ncols in pivots:
        return None
    solution = [domain.zero] * ncols
    for row_index, col in enumerate(pivots):
        solution[col] = reduced[row_index][ncols]
    return solution


def nullspace(rows: Sequence[Row], ncols: int, domain: Domain) -> list[list[Any]]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [domain.zero] * ncols
            v[j] = domain.one
            basis.append(v)
        return basis
    reduced, pivots = _rref(rows, ncols, domain)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [domain.zero] * ncols
        v[f] = domain.one
        for row_index, col in enumerate(pivots):
            v[col] = -reduced[row_index][f]
        basis.append(v)
    return basis
