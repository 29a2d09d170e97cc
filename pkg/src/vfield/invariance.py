"""
Invariance certification, singular schemes and tangency.
"""

import logging
from dataclasses import dataclass

from src.algebra.polynomial import degree, homogeneous_degree
from src.algebra.ring import Polynomial
from src.errors import (
    InvariantHyperplaneError,
    NotHomogeneousError,
    PreconditionError,
    ZeroFieldError,
)
from src.groebner.basis import MembershipWitness, divide
from src.groebner.hilbert import hilbert_data
from src.groebner.ideal import Ideal, ideal_membership
from src.groebner.operations import saturate_irrelevant
from src.vfield.field import VectorField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorCheck:
    """One generator F of the saturated ideal and the witness for X(F) against it."""

    generator: Polynomial
    image: Polynomial
    witness: MembershipWitness


@dataclass(frozen=True)
class InvarianceCertificate:
    """
    Outcome of an invariance test with exact witnesses.

    Attributes:
        verdict: True iff X(F) lies in the saturated ideal for every generator F.
        field: The field tested.
        ideal: The saturated ideal the witnesses refer to.
        checks: One entry per generator of `ideal`.
        saturation_changed: Saturating the input gave a strictly larger ideal.
        raw_generator_test: The same test run on the unsaturated generators.
        multiplier: For a principal ideal (F) with a positive verdict, the P
            with X(F) = P F.
        diagnostics: Human-readable notes.
    """

    verdict: bool
    field: VectorField
    ideal: Ideal
    checks: tuple[GeneratorCheck, ...]
    saturation_changed: bool
    raw_generator_test: bool
    multiplier: Polynomial | None = None
    diagnostics: tuple[str, ...] = ()

    def verify(self) -> bool:
        """Re-expand every witness identity and recompute every image."""
        for check in self.checks:
            if check.image != self.field.apply(check.generator):
                return False
            if not check.witness.verify(check.image, self.ideal.generators):
                return False
        return self.verdict == all(c.witness.is_member for c in self.checks)


def _require_nonzero(X: VectorField) -> None:
    if X.is_zero():
        raise ZeroFieldError("the field is a multiple of the radial field")


def singular_scheme(X: VectorField) -> Ideal:
    """
    Saturated ideal of the 2x2 minors of [[t_0..t_n], [G_0..G_n]].

    Raises:
        ZeroFieldError: If X is zero modulo the radial field.
    """
    _require_nonzero(X)
    minors = Ideal(X.ring, X.minors().values(), name="Sing")
    return saturate_irrelevant(minors)


def invariance_check(X: VectorField, ideal: Ideal) -> InvarianceCertificate:
    """
    Decide whether X leaves V(I) invariant.

    The ideal is saturated first; the generator-level test on the raw input is
    kept as a diagnostic since it may fail for unsaturated ideals.

    Raises:
        NotHomogeneousError: If the ideal is not homogeneous.
        PreconditionError: If the ideal and the field live on different spaces.
    """
    if not ideal.is_homogeneous:
        raise NotHomogeneousError("invariance is only defined for homogeneous ideals")
    if ideal.ring != X.ring:
        raise PreconditionError("field and ideal live on different projective spaces")

    saturated = saturate_irrelevant(ideal)
    changed = saturated != ideal
    raw = all(ideal.contains(X.apply(f)) for f in ideal.generators)

    checks = []
    for f in saturated.generators:
        image = X.apply(f)
        _, witness = ideal_membership(image, saturated)
        checks.append(GeneratorCheck(f, image, witness))
    verdict = all(c.witness.is_member for c in checks)

    multiplier = None
    if verdict and len(saturated.generators) == 1:
        multiplier = checks[0].witness.cofactors[0]

    diagnostics = []
    if changed:
        diagnostics.append("input ideal was not saturated; tested its saturation")
    if raw != verdict:
        diagnostics.append(
            f"generator-level test on the raw input gives {str(raw).lower()}, "
            f"saturated test gives {str(verdict).lower()}"
        )
    logger.debug(
        "Invariance checked",
        extra={"verdict": verdict, "saturation_changed": changed, "generators": len(checks)},
    )
    return InvarianceCertificate(
        verdict=verdict,
        field=X,
        ideal=saturated,
        checks=tuple(checks),
        saturation_changed=changed,
        raw_generator_test=raw,
        multiplier=multiplier,
        diagnostics=tuple(diagnostics),
    )


def tangency_degree(X: VectorField, form: Polynomial) -> int:
    """
    Degree of the tangency divisor of X along the hyperplane V(form).

    The section is sum(c_i G_i) restricted to the hyperplane, where form = sum(c_i t_i).

    Raises:
        ZeroFieldError: If X is zero.
        PreconditionError: If `form` is not a nonzero linear form.
        InvariantHyperplaneError: If X leaves the hyperplane invariant.
    """
    _require_nonzero(X)
    form = X.ring.element(form)
    if not form or homogeneous_degree(form) != 1:
        raise PreconditionError("tangency needs a nonzero linear form")
    section = X.apply(form)
    _, restricted = divide(section, [form])
    if not restricted:
        raise InvariantHyperplaneError(f"the hyperplane V({form}) is invariant")
    return int(degree(restricted))


def finite_field_singularities_on(ideal: Ideal, X: VectorField) -> bool:
    """
    True iff V(I) meets the singular scheme of X in finitely many points.

    Raises:
        ZeroFieldError: If X is zero.
    """
    combined = ideal + singular_scheme(X)
    return hilbert_data(combined).dimension <= 0
