"""
Built-in example families and re-derivation of their expected facts.

Families register themselves by name; `corpus(name, **params)` builds an
instance. Expected facts are never trusted: `recompute_facts` derives each one
again with the exact pipeline.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from math import prod
from typing import Any

from src.acm.reduction import acm_check, regularity_acm
from src.algebra import linalg
from src.algebra.polynomial import gradient, homogeneous_degree
from src.algebra.ring import Polynomial, Ring
from src.errors import PreconditionError
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal
from src.groebner.operations import saturate_irrelevant
from src.types.reports import ExpectedFacts, FactComparison
from src.vfield.field import VectorField
from src.vfield.hypersurface import min_invariant_degree, trivial_field
from src.vfield.invariance import invariance_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusInstance:
    """
    A named example: an ideal, a field leaving it invariant, and expected facts.

    Attributes:
        acm_ideal: The ACM scheme W containing V to project with (V itself if None).
        polynomial: Equation of V for hypersurface families.
        degrees: Generator degrees for complete intersection families.
        surface: An ACM surface containing V, with `hypersurface` cutting V out of it.
    """

    name: str
    parameters: dict[str, Any]
    ideal: Ideal
    field: VectorField
    expected: ExpectedFacts
    acm_ideal: Ideal | None = None
    polynomial: Polynomial | None = None
    degrees: tuple[int, ...] | None = None
    surface: Ideal | None = None
    hypersurface: Polynomial | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring


FamilyBuilder = Callable[..., CorpusInstance]

# Family registry
_families: dict[str, FamilyBuilder] = {}


def register_family(name: str) -> Callable[[FamilyBuilder], FamilyBuilder]:
    """
    Decorator to register a corpus family.

    Example:
        @register_family("cone")
        def cone(p: int = 0) -> CorpusInstance:
            ...
    """

    def decorator(builder: FamilyBuilder) -> FamilyBuilder:
        _families[name] = builder
        return builder

    return decorator


def get_family(name: str) -> FamilyBuilder | None:
    return _families.get(name)


def list_families() -> list[str]:
    """List all registered family names."""
    return list(_families.keys())


def corpus(family: str, **params: Any) -> CorpusInstance:
    """
    Build an instance of a registered family.

    Raises:
        PreconditionError: On an unknown family or invalid parameters.
    """
    builder = get_family(family)
    if builder is None:
        raise PreconditionError(f"unknown family {family!r}; known: {', '.join(list_families())}")
    try:
        instance = builder(**params)
    except TypeError as exc:
        raise PreconditionError(f"invalid parameters for {family}: {exc}") from exc
    logger.debug("Corpus instance built", extra={"family": family, "params": params})
    return instance


def _field(ring: Ring, coefficients: Sequence[Polynomial], degree: int | None = None) -> VectorField:
    return VectorField.of(ring, coefficients, degree)


def _hypersurface_instance(
    name: str, params: dict[str, Any], F: Polynomial, X: VectorField, **facts: Any
) -> CorpusInstance:
    ring = Ring.of(F)
    return CorpusInstance(
        name=name,
        parameters=params,
        ideal=Ideal(ring, [F], name="V"),
        field=X,
        expected=ExpectedFacts(invariant=True, field_degree=X.degree, **facts),
        polynomial=F,
    )


@register_family("jouanolou")
def jouanolou(d: int = 4, p: int = 2) -> CorpusInstance:
    """
    The curve t_2^(d-1) t_0 + t_0^(d-1) t_1 + t_1^(d-1) t_2 with the field
    t_1^(d-2) d_0 + t_2^(d-2) d_1 + t_0^(d-2) d_2, over F_p with p | d.
    """
    if p <= 0 or d < 2 or d % p:
        raise PreconditionError(f"need a prime p dividing d >= 2, got d={d}, p={p}")
    ring = Ring.projective(2, p)
    t0, t1, t2 = ring.gens
    F = t2 ** (d - 1) * t0 + t0 ** (d - 1) * t1 + t1 ** (d - 1) * t2
    X = _field(ring, [t1 ** (d - 2), t2 ** (d - 2), t0 ** (d - 2)])
    return _hypersurface_instance("jouanolou", {"d": d, "p": p}, F, X, degree=d)


def _rational_curve(d: int, p: int) -> tuple[Ideal, VectorField]:
    if d < 3:
        raise PreconditionError(f"rational curves start at d = 3, got {d}")
    ring = Ring.projective(3, p)
    t0, t1, t2, t3 = ring.gens
    ideal = Ideal(
        ring,
        [
            t1 * t2 - t0 * t3,
            t1 ** (d - 1) - t2 * t0 ** (d - 2),
            t2 ** (d - 1) - t1 * t3 ** (d - 2),
        ],
        name=f"C{d}",
    )
    X = _field(ring, [t0 * d, t1 * (d - 2), -t2 * (d - 2), -t3 * d])
    return ideal, X


@register_family("rational_curve")
def rational_curve(d: int = 4, p: int = 0) -> CorpusInstance:
    """
    The rational curve (s^d : s^(d-1)u : s u^(d-1) : u^d) in P^3 with the
    diagonal field d t_0 d_0 + (d-2) t_1 d_1 - (d-2) t_2 d_2 - d t_3 d_3.

    Only d = 3 is ACM; the regularity grows with d while m stays 1.
    """
    ideal, X = _rational_curve(d, p)
    expected = ExpectedFacts(
        invariant=True, degree=d, field_degree=1, acm=d == 3, regularity=2 if d == 3 else None
    )
    return CorpusInstance("rational_curve", {"d": d, "p": p}, ideal, X, expected)


@register_family("twisted_cubic")
def twisted_cubic(p: int = 0) -> CorpusInstance:
    ideal, X = _rational_curve(3, p)
    expected = ExpectedFacts(invariant=True, degree=3, field_degree=1, acm=True, regularity=2)
    return CorpusInstance("twisted_cubic", {"p": p}, ideal, X, expected)


@register_family("ccf")
def ccf(d: int = 4, n: int = 3, p: int = 0) -> CorpusInstance:
    """
    The plane curve t_0 t_2^(d-1) = t_1^d inside the plane t_2 = d t_3 of P^3,
    invariant under t_0 t_2 d_0 + t_1 t_3 d_1. For n > 3 the remaining
    coordinates are set to zero.
    """
    if d < 2 or n < 3:
        raise PreconditionError(f"need d >= 2 and n >= 3, got d={d}, n={n}")
    ring = Ring.projective(n, p)
    t = ring.gens
    generators = [t[2] - t[3] * d, t[0] * t[2] ** (d - 1) - t[1] ** d, *t[4:]]
    coefficients = [t[0] * t[2], t[1] * t[3]] + [ring.zero] * (n - 1)
    X = _field(ring, coefficients)
    expected = ExpectedFacts(
        invariant=True, degree=d, field_degree=2, acm=True, regularity=d
    )
    return CorpusInstance(
        "ccf",
        {"d": d, "n": n, "p": p},
        Ideal(ring, generators, name=f"CCF{d}"),
        X,
        expected,
        degrees=(1, d, *([1] * (n - 3))),
    )


@register_family("two_points")
def two_points(p: int = 0) -> CorpusInstance:
    """The points (1 : 1 : 1) and (1 : -1 : 1) of P^2 with t_1 d_0 + t_0 d_1 + t_1 d_2."""
    ring = Ring.projective(2, p)
    t0, t1, t2 = ring.gens
    ideal = Ideal(ring, [t0 - t2, t1**2 - t2**2], name="P2")
    X = _field(ring, [t1, t0, t1])
    expected = ExpectedFacts(invariant=True, degree=2, field_degree=1, acm=True, regularity=2)
    return CorpusInstance("two_points", {"p": p}, ideal, X, expected)


def _jacobian_field(ring: Ring, forms: Sequence[Polynomial]) -> VectorField:
    """
    G_i = (-1)^i det of [grad F_1; ...; grad F_(n-1); e_n] without column i.

    Then sum(G_i d_i H) = det[grad H; grad F_1; ...; e_n], which vanishes for
    every H among the forms.
    """
    domain = ring.backend.to_domain()
    last = [ring.zero] * ring.n + [ring.one]
    rows = [list(gradient(f)) for f in forms] + [last]
    coefficients = []
    for i in range(ring.nvars):
        minor = [[a for k, a in enumerate(row) if k != i] for row in rows]
        det = ring.element(linalg.determinant(minor, domain))
        coefficients.append(det if i % 2 == 0 else -det)
    return _field(ring, coefficients, sum(homogeneous_degree(f) - 1 for f in forms))


@register_family("complete_intersection")
def complete_intersection(degrees: Sequence[int] = (2, 3), p: int = 0) -> CorpusInstance:
    """
    The curve F_1 = ... = F_(n-1) = 0 in P^n, n = len(degrees) + 1, with
    F_k = sum_i (i+1)^k t_i^(d_k), and its Jacobian field.
    """
    degrees = tuple(int(d) for d in degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise PreconditionError(f"degrees must be positive, got {degrees}")
    n = len(degrees) + 1
    ring = Ring.projective(n, p)
    forms = [
        sum((t ** d * (i + 1) ** k for i, t in enumerate(ring.gens)), ring.zero)
        for k, d in enumerate(degrees, start=1)
    ]
    X = _jacobian_field(ring, forms)
    expected = ExpectedFacts(
        invariant=True,
        degree=prod(degrees),
        field_degree=sum(d - 1 for d in degrees),
        acm=True,
        regularity=sum(degrees) - n + 2,
    )
    return CorpusInstance(
        "complete_intersection",
        {"degrees": list(degrees), "p": p},
        Ideal(ring, forms, name="CI"),
        X,
        expected,
        degrees=degrees,
    )


@register_family("fermat")
def fermat(n: int = 2, d: int = 4, p: int = 0) -> CorpusInstance:
    """The Fermat hypersurface sum(t_i^d) with the trivial field P_01 = 1."""
    if n < 1 or d < 1:
        raise PreconditionError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    ring = Ring.projective(n, p)
    F = sum((t**d for t in ring.gens), ring.zero)
    X = trivial_field(F, {(0, 1): ring.one})
    facts: dict[str, Any] = {"degree": d}
    if not (p and d % p == 0):
        facts["q"] = d - 1
    return _hypersurface_instance("fermat", {"n": n, "d": d, "p": p}, F, X, **facts)


@register_family("cone")
def cone(p: int = 0) -> CorpusInstance:
    """The cone t_0 t_1^2 + t_1^3 over a point, invariant under d_2."""
    ring = Ring.projective(2, p)
    t0, t1, _ = ring.gens
    F = t0 * t1**2 + t1**3
    return _hypersurface_instance("cone", {"p": p}, F, VectorField.partial(ring, 2), degree=3, q=0)


@register_family("monomial_curve")
def monomial_curve(a: int = 1, b: int = 2, p: int = 0) -> CorpusInstance:
    """t_0^a t_1^b - t_2^(a+b), invariant under (a+b) t_0 d_0 + a t_2 d_2."""
    if a < 1 or b < 1:
        raise PreconditionError(f"exponents must be positive, got a={a}, b={b}")
    ring = Ring.projective(2, p)
    t0, t1, t2 = ring.gens
    F = t0**a * t1**b - t2 ** (a + b)
    X = _field(ring, [t0 * (a + b), ring.zero, t2 * a])
    return _hypersurface_instance(
        "monomial_curve", {"a": a, "b": b, "p": p}, F, X, degree=a + b, q=1
    )


@register_family("quadric_curve")
def quadric_curve(p: int = 0) -> CorpusInstance:
    """
    The twisted cubic as a curve of bidegree (1, 2) on the quadric
    t_0 t_3 - t_1 t_2, cut out of it by t_1^2 - t_0 t_2 (plus a line).
    """
    ideal, X = _rational_curve(3, p)
    t0, t1, t2, t3 = ideal.ring.gens
    surface = Ideal(ideal.ring, [t0 * t3 - t1 * t2], name="Q")
    expected = ExpectedFacts(invariant=True, degree=3, field_degree=1, acm=True, regularity=2)
    return CorpusInstance(
        "quadric_curve",
        {"p": p},
        ideal,
        X,
        expected,
        surface=surface,
        hypersurface=t1**2 - t0 * t2,
    )


def recompute_facts(instance: CorpusInstance, seed: int = 0) -> list[FactComparison]:
    """Re-derive every expected fact of an instance."""
    expected = instance.expected
    ideal = saturate_irrelevant(instance.ideal)
    results = []
    if expected.invariant is not None:
        results.append(
            FactComparison(
                name="invariant",
                expected=expected.invariant,
                actual=invariance_check(instance.field, ideal).verdict,
            )
        )
    if expected.degree is not None:
        results.append(
            FactComparison(name="degree", expected=expected.degree, actual=hilbert_data(ideal).degree)
        )
    if expected.field_degree is not None:
        results.append(
            FactComparison(
                name="field_degree", expected=expected.field_degree, actual=instance.field.degree
            )
        )
    is_acm = None
    if expected.acm is not None or expected.regularity is not None:
        is_acm = acm_check(ideal, seed).is_acm
    if expected.acm is not None:
        results.append(FactComparison(name="acm", expected=expected.acm, actual=is_acm))
    if expected.regularity is not None:
        actual = regularity_acm(ideal, seed) if is_acm else None
        results.append(FactComparison(name="regularity", expected=expected.regularity, actual=actual))
    if expected.q is not None and instance.polynomial is not None:
        results.append(
            FactComparison(name="q", expected=expected.q, actual=min_invariant_degree(instance.polynomial))
        )
    logger.info(
        "Corpus facts recomputed",
        extra={
            "family": instance.name,
            "checked": len(results),
            "disagreements": [r.name for r in results if not r.agrees],
        },
    )
    return results
