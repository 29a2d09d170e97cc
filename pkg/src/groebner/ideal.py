"""
Ideals of k[t0..tn] with cached Groebner bases.
"""

from collections.abc import Iterable
from typing import TYPE_CHECKING, Union

from src.algebra.polynomial import degree, is_homogeneous
from src.algebra.ring import GREVLEX, MonomialOrder, Polynomial, Ring
from src.constants import Saturation
from src.groebner.basis import GroebnerBasis, MembershipWitness, buchberger

if TYPE_CHECKING:
    from src.algebra.coordinates import CoordinateChange


class Ideal:
    """
    An ideal given by generators, with per-order Groebner basis caches.

    Generators are stored nonzero, in the grevlex ring on the same variables.
    Cached bases are immutable once stored; equality compares reduced grevlex
    bases, so two generating sets of the same ideal compare equal.
    """

    def __init__(
        self,
        ring: Ring,
        generators: Iterable[Polynomial] = (),
        *,
        saturated: Saturation = Saturation.UNKNOWN,
        name: str | None = None,
    ) -> None:
        self.ring = ring.graded()
        self.generators: tuple[Polynomial, ...] = tuple(
            g for g in (self.ring.element(f) for f in generators) if g
        )
        self.saturated = saturated
        self.name = name
        self._bases: dict[tuple[MonomialOrder, bool], GroebnerBasis] = {}

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, (), saturated=Saturation.YES)

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, (ring.one,), saturated=Saturation.YES)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.generators)

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(int(degree(g)) for g in self.generators)

    def groebner(
        self, order: MonomialOrder | None = None, *, with_transform: bool = False
    ) -> GroebnerBasis:
        """
        Reduced Groebner basis under `order` (grevlex by default).

        A tracked basis also serves untracked requests.
        """
        order = order or GREVLEX
        tracked = self._bases.get((order, True))
        if tracked is not None:
            return tracked
        if not with_transform:
            plain = self._bases.get((order, False))
            if plain is not None:
                return plain
        basis = buchberger(
            self.generators, self.ring.with_order(order), with_transform=with_transform
        )
        self._bases[(order, with_transform)] = basis
        return basis

    @property
    def is_unit(self) -> bool:
        return self.groebner().is_unit

    def reduced_basis(self) -> tuple[Polynomial, ...]:
        return self.groebner().elements

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.reduced_basis() == other.reduced_basis()

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Union["Ideal", Iterable[Polynomial]]) -> "Ideal":
        extra = other.generators if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.ring, self.generators + tuple(extra))

    def marked(self, saturated: Saturation) -> "Ideal":
        """Same ideal (sharing caches) with a different saturation flag."""
        clone = Ideal(self.ring, self.generators, saturated=saturated, name=self.name)
        clone._bases = self._bases
        return clone

    def transformed(self, change: "CoordinateChange") -> "Ideal":
        """The ideal expressed in the new coordinates of `change`."""
        return Ideal(
            self.ring,
            (change.polynomial(g) for g in self.generators),
            saturated=self.saturated,
            name=self.name,
        )

    def restricted(self, keep: int) -> "Ideal":
        """Move generators involving only t0..t(keep-1) into k[t0..t(keep-1)]."""
        small = self.ring.truncated(keep)
        return Ideal(small, (small.element(g) for g in self.generators), name=self.name)

    def embedded(self, ring: Ring) -> "Ideal":
        """Move generators into a ring with more (or the same) variables."""
        return Ideal(ring, (ring.element(g) for g in self.generators), name=self.name)

    def __repr__(self) -> str:
        label = f"{self.name} = " if self.name else ""
        return f"Ideal({label}{', '.join(str(g) for g in self.generators) or '0'})"


def ideal_membership(f: Polynomial, ideal: Ideal) -> tuple[bool, MembershipWitness]:
    """
    Decide f in I, with a witness over the generators of I either way.

    Returns:
        (is_member, witness) where witness.cofactors align with ideal.generators.
    """
    witness = ideal.groebner(with_transform=True).normal_form(ideal.ring.element(f))
    return witness.is_member, witness
