"""
Vector fields on P^n, taken modulo multiples of the radial field.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from src.algebra.polynomial import degree_and_homogeneity, partial_derivative
from src.algebra.ring import Polynomial, Ring
from src.errors import NotHomogeneousError, PreconditionError, RingMismatchError

if TYPE_CHECKING:
    from src.algebra.coordinates import CoordinateChange

Minors = dict[tuple[int, int], Polynomial]


@dataclass(frozen=True)
class VectorField:
    """
    The field induced by sum(G_i d_i) on P^n.

    Attributes:
        ring: Grevlex ring k[t0..tn].
        coefficients: G_0..G_n, homogeneous of common degree (zero allowed).
        degree: The common degree m.
        name: Optional label from a problem file.
    """

    ring: Ring
    coefficients: tuple[Polynomial, ...]
    degree: int
    name: str | None = field(default=None, compare=False)

    @classmethod
    def of(
        cls,
        ring: Ring,
        coefficients: Sequence[Polynomial],
        degree: int | None = None,
        name: str | None = None,
    ) -> "VectorField":
        """
        Build a field, validating arity and homogeneity.

        Args:
            ring: Ambient ring.
            coefficients: Exactly n+1 polynomials.
            degree: Required when every coefficient is zero; checked otherwise.

        Raises:
            PreconditionError: On wrong arity or a declared degree mismatch.
            NotHomogeneousError: On inhomogeneous or mixed-degree coefficients.
        """
        ring = ring.graded()
        if len(coefficients) != ring.nvars:
            raise PreconditionError(
                f"a field on P^{ring.n} needs {ring.nvars} coefficients, got {len(coefficients)}"
            )
        coeffs = tuple(ring.element(c) for c in coefficients)
        degrees = set()
        for index, c in enumerate(coeffs):
            ok, d = degree_and_homogeneity(c)
            if not ok:
                raise NotHomogeneousError(f"coefficient {index} is not homogeneous")
            if c:
                degrees.add(int(d))  # type: ignore[arg-type]
        if len(degrees) > 1:
            raise NotHomogeneousError(f"coefficients have different degrees {sorted(degrees)}")
        if degrees:
            actual = degrees.pop()
            if degree is not None and degree != actual:
                raise PreconditionError(f"declared degree {degree}, coefficients have degree {actual}")
        else:
            actual = 0 if degree is None else degree
        return cls(ring, coeffs, actual, name)

    @classmethod
    def radial(cls, ring: Ring) -> "VectorField":
        return cls.of(ring, ring.graded().gens)

    @classmethod
    def partial(cls, ring: Ring, i: int) -> "VectorField":
        """The constant field d_i."""
        coeffs = [ring.one if k == i else ring.zero for k in range(ring.nvars)]
        return cls.of(ring, coeffs)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def characteristic(self) -> int:
        return self.ring.characteristic

    def minors(self) -> Minors:
        """The 2x2 minors t_i G_j - t_j G_i for i < j."""
        t, g = self.ring.gens, self.coefficients
        return {
            (i, j): t[i] * g[j] - t[j] * g[i]
            for i in range(self.ring.nvars)
            for j in range(i + 1, self.ring.nvars)
        }

    def is_zero(self) -> bool:
        return not any(self.minors().values())

    def apply(self, f: Polynomial) -> Polynomial:
        """The derivation sum(G_i d_i f)."""
        f = self.ring.element(f)
        result = self.ring.zero
        for i, g in enumerate(self.coefficients):
            if g:
                result += g * partial_derivative(f, i)
        return result

    def _check_ring(self, other: "VectorField") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("vector fields live on different projective spaces")

    def equivalent(self, other: "VectorField") -> bool:
        """Equality modulo the radial field, by exact minor comparison."""
        self._check_ring(other)
        return self.minors() == other.minors()

    def proportional_to(self, other: "VectorField") -> bool:
        """Minors agree up to one nonzero scalar (same foliation)."""
        self._check_ring(other)
        mine, theirs = self.minors(), other.minors()
        scale = None
        for key, a in mine.items():
            b = theirs[key]
            if bool(a) != bool(b):
                return False
            if not a:
                continue
            if scale is None:
                scale = a.LC / b.LC
            if a != b * scale:
                return False
        return True

    def transformed(self, change: "CoordinateChange") -> "VectorField":
        """Field in the new coordinates s = M t: G'_k(s) = sum_i M[k][i] G_i(M^-1 s)."""
        moved = [change.polynomial(g) for g in self.coefficients]
        coeffs = []
        for row in change.matrix:
            total = self.ring.zero
            for c, g in zip(row, moved, strict=True):
                if c and g:
                    total += g * c
            coeffs.append(total)
        return VectorField.of(self.ring, coeffs, self.degree, self.name)

    def __str__(self) -> str:
        terms = [f"({g})*d{i}" for i, g in enumerate(self.coefficients) if g]
        return " + ".join(terms) or "0"


def is_zero_field(X: VectorField) -> bool:
    """True iff every minor t_i G_j - t_j G_i vanishes."""
    return X.is_zero()
