"""
Polynomial rings k[t0..tn] with a fixed monomial order.

Rings are thin immutable descriptors around cached sympy `PolyRing`
backends; two descriptors with the same data share one backend, so their
elements interoperate directly.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from sympy.polys.domains.domain import Domain
from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.scalars import characteristic_of, field_for
from src.constants import VARIABLE_PREFIX, OrderKind
from src.errors import PreconditionError, RingMismatchError

Polynomial = PolyElement
Monomial = tuple[int, ...]


@dataclass(frozen=True)
class _Slice:
    """Picklable, comparable exponent-vector slice used inside product orders."""

    start: int | None
    stop: int | None

    def __call__(self, monomial: Monomial) -> Monomial:
        return monomial[self.start : self.stop]


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order on k[t0..tn].

    `block(k)` compares the last n+1-k variables first (grevlex), then the
    first k (grevlex), so it eliminates the trailing variables.
    """

    kind: OrderKind = OrderKind.GREVLEX
    block: int | None = None

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(OrderKind.GREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(OrderKind.LEX)

    @classmethod
    def eliminating(cls, keep: int) -> "MonomialOrder":
        """Block order keeping the first `keep` variables."""
        return cls(OrderKind.BLOCK, keep)

    def sympy_order(self) -> SympyOrder:
        if self.kind == OrderKind.GREVLEX:
            return grevlex
        if self.kind == OrderKind.LEX:
            return lex
        return ProductOrder(
            (grevlex, _Slice(self.block, None)),
            (grevlex, _Slice(None, self.block)),
        )

    def __str__(self) -> str:
        return f"block({self.block})" if self.kind == OrderKind.BLOCK else str(self.kind)


GREVLEX = MonomialOrder.grevlex()


@lru_cache(maxsize=256)
def _backend(nvars: int, characteristic: int, order: MonomialOrder) -> PolyRing:
    symbols = ",".join(f"{VARIABLE_PREFIX}{i}" for i in range(nvars))
    return PolyRing(symbols, field_for(characteristic), order.sympy_order())


@dataclass(frozen=True)
class Ring:
    """
    The ring S = k[t0..tn].

    Attributes:
        nvars: Number of variables n+1.
        characteristic: 0 or a prime p.
        order: Monomial order used for leading terms.
    """

    nvars: int
    characteristic: int = 0
    order: MonomialOrder = field(default=GREVLEX)

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise PreconditionError("a ring needs at least one variable")
        field_for(self.characteristic)
        if self.order.kind == OrderKind.BLOCK and not (
            self.order.block is not None and 0 <= self.order.block <= self.nvars
        ):
            raise PreconditionError(f"block size {self.order.block} out of range")

    @classmethod
    def of(cls, f: Polynomial) -> "Ring":
        """Grevlex ring descriptor of an existing polynomial."""
        return cls(f.ring.ngens, characteristic_of(f.ring.domain))

    @classmethod
    def projective(cls, n: int, characteristic: int = 0) -> "Ring":
        """Homogeneous coordinate ring of P^n."""
        return cls(n + 1, characteristic)

    @property
    def n(self) -> int:
        return self.nvars - 1

    @property
    def domain(self) -> Domain:
        return field_for(self.characteristic)

    @property
    def backend(self) -> PolyRing:
        return _backend(self.nvars, self.characteristic, self.order)

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.backend.gens)

    @property
    def zero(self) -> Polynomial:
        return self.backend.zero

    @property
    def one(self) -> Polynomial:
        return self.backend.one

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.nvars, self.characteristic, order)

    def graded(self) -> "Ring":
        """Same variables under grevlex."""
        return self.with_order(GREVLEX)

    def extended(self, extra: int = 1) -> "Ring":
        """Append `extra` variables, ordered by grevlex."""
        return Ring(self.nvars + extra, self.characteristic)

    def truncated(self, keep: int) -> "Ring":
        """Subring in the first `keep` variables, ordered by grevlex."""
        return Ring(keep, self.characteristic)

    def constant(self, value: Any) -> Polynomial:
        return self.backend.ground_new(self.domain.convert(value))

    def monomial(self, exponents: Monomial, coeff: Any = None) -> Polynomial:
        c = self.domain.one if coeff is None else self.domain.convert(coeff)
        return self.backend.from_dict({tuple(exponents): c})

    def from_terms(self, terms: dict[Monomial, Any]) -> Polynomial:
        return self.backend.from_dict({m: c for m, c in terms.items() if c})

    def owns(self, f: Polynomial) -> bool:
        return f.ring == self.backend

    def element(self, f: Polynomial) -> Polynomial:
        """
        Move a polynomial into this ring.

        Re-sorts terms for a different order, pads missing variables with zero
        exponents and drops trailing variables that do not occur.

        Raises:
            RingMismatchError: On a different coefficient field, or when a dropped
                variable actually occurs.
        """
        if f.ring == self.backend:
            return f
        if f.ring.domain != self.domain:
            raise RingMismatchError(
                f"cannot move a polynomial over {f.ring.domain} into a ring over {self.domain}"
            )
        k = self.nvars
        terms: dict[Monomial, Any] = {}
        for monom, coeff in f.iterterms():
            if len(monom) > k and any(monom[k:]):
                raise RingMismatchError(f"polynomial involves variables beyond t{k - 1}")
            terms[(monom + (0,) * (k - len(monom)))[:k]] = coeff
        return self.backend.from_dict(terms)

    def leading_key(self, monomial: Monomial) -> Any:
        """Sort key of a monomial under this ring's order."""
        return self.backend.order(monomial)

    def __str__(self) -> str:
        return f"{self.domain}[t0..t{self.n}] ({self.order})"
