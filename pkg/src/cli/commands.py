"""
Subcommand handlers registry and implementations.

Handlers are pure: they read the problem text carried by the context and
return a report. Exceptions propagate to the entry point, which maps them
to exit codes.
"""

import logging
from collections.abc import Callable, Sequence

from src.acm.reduction import acm_check, regularity_acm
from src.algebra.polynomial import homogeneous_degree
from src.algebra.ring import Polynomial
from src.bounds.corpus import CorpusInstance, corpus, recompute_facts
from src.bounds.nodal import nodal_diagnostic
from src.bounds.verdicts import (
    corollary2_verdict,
    theorem1_verdict,
    theorem1star_verdict,
    theorem3_verdict,
    theorem8_verdict,
    theorem18_verdict,
)
from src.cli.grammar import ProblemFile, format_polynomial, format_problem, parse
from src.constants import ExitCode, NodalVerdict, TheoremTag
from src.errors import InputError
from src.groebner.hilbert import hilbert_data
from src.project.pipeline import project_field
from src.types.command import CommandContext, CommandReport
from src.types.reports import BoundReport
from src.vfield.field import VectorField
from src.vfield.hypersurface import koszul_decompose, minimal_invariant_field, trivial_field
from src.vfield.invariance import invariance_check, singular_scheme, tangency_degree

logger = logging.getLogger(__name__)

# Type alias for subcommand handlers
CommandHandler = Callable[[CommandContext], CommandReport]

# Handler registry
_commands: dict[str, CommandHandler] = {}


def register_command(name: str) -> Callable[[CommandHandler], CommandHandler]:
    """
    Decorator to register a subcommand handler.

    Example:
        @register_command("acm")
        def handle_acm(context: CommandContext) -> CommandReport:
            ...
    """

    def decorator(handler: CommandHandler) -> CommandHandler:
        _commands[name] = handler
        return handler

    return decorator


def get_command(name: str) -> CommandHandler | None:
    return _commands.get(name)


def list_commands() -> list[str]:
    """List all registered subcommands."""
    return list(_commands.keys())


def load_problem(context: CommandContext) -> ProblemFile:
    if context.problem_text is None:
        raise InputError(f"{context.command} needs a problem file (-i FILE or standard input)")
    return parse(context.problem_text)


def _report(context: CommandContext) -> CommandReport:
    return CommandReport(command=context.command, seed=context.seed)


def _polys(polys: Sequence[Polynomial]) -> str:
    return ", ".join(format_polynomial(f) for f in polys) or "0"


def _field_text(X: VectorField) -> str:
    return "[" + _polys(X.coefficients) + "]"


def _status(flag: bool) -> str:
    return "verified" if flag else "failed"


@register_command("check-invariance")
def handle_check_invariance(context: CommandContext) -> CommandReport:
    """Decide whether the field leaves the scheme of the ideal invariant."""
    problem = load_problem(context)
    ideal = problem.ideal(context.option("ideal"))
    X = problem.vfield(context.option("vfield"))
    certificate = invariance_check(X, ideal)

    report = _report(context)
    report.add("ideal", ideal.name)
    report.add("field", X.name)
    report.add("field_degree", X.degree)
    report.add("saturated_ideal", _polys(certificate.ideal.generators))
    report.add("saturation_changed", certificate.saturation_changed)
    report.add("raw_generator_test", certificate.raw_generator_test)
    for k, check in enumerate(certificate.checks):
        remainder = check.witness.remainder
        report.add(
            f"generator_{k}",
            "in ideal" if not remainder else f"remainder {format_polynomial(remainder)}",
            machine={"generator": format_polynomial(check.generator), "member": not remainder},
        )
    if certificate.multiplier is not None:
        report.add("multiplier", format_polynomial(certificate.multiplier))
    if certificate.diagnostics:
        notes = list(certificate.diagnostics)
        report.add("diagnostics", "; ".join(notes), machine=notes)
    report.add("witnesses", _status(certificate.verify()))
    report.add("invariance", _status(certificate.verdict))
    report.exit_code = ExitCode.AFFIRMATIVE if certificate.verdict else ExitCode.NEGATIVE
    return report


@register_command("acm")
def handle_acm(context: CommandContext) -> CommandReport:
    """Regular-sequence test of generic linear forms."""
    problem = load_problem(context)
    ideal = problem.ideal(context.option("ideal"))
    result = acm_check(ideal, context.seed)

    report = _report(context)
    report.add("ideal", ideal.name)
    report.add("dimension", hilbert_data(result.ideal).dimension)
    report.add(
        "draws",
        ", ".join(f"{d.seed}:{d.outcome}" for d in result.draws),
        machine=[{"seed": d.seed, "outcome": str(d.outcome)} for d in result.draws],
    )
    if result.is_acm:
        report.add("regular_sequence", _polys(result.forms))
    if result.witness is not None:
        report.add("zerodivisor_step", result.witness.step)
        report.add("zerodivisor_form", format_polynomial(result.witness.form))
        report.add("zerodivisor_element", format_polynomial(result.witness.element))
    report.add("acm", result.is_acm)
    report.exit_code = ExitCode.AFFIRMATIVE if result.is_acm else ExitCode.NEGATIVE
    return report


@register_command("regularity")
def handle_regularity(context: CommandContext) -> CommandReport:
    """Castelnuovo-Mumford regularity of an ACM ideal."""
    problem = load_problem(context)
    ideal = problem.ideal(context.option("ideal"))
    result = acm_check(ideal, context.seed)

    report = _report(context)
    report.add("ideal", ideal.name)
    report.add("acm", result.is_acm)
    if not result.is_acm:
        report.add("regularity", "undefined", machine=None)
        report.exit_code = ExitCode.NEGATIVE
        return report
    report.add("degree", hilbert_data(result.ideal).degree)
    report.add("regularity", regularity_acm(ideal, context.seed))
    return report


@register_command("project")
def handle_project(context: CommandContext) -> CommandReport:
    """Project an invariant scheme and its field from a generic center."""
    problem = load_problem(context)
    V = problem.ideal(context.option("ideal"))
    acm_name = context.option("acm_ideal")
    W = problem.ideal(acm_name) if acm_name is not None else V
    X = problem.vfield(context.option("vfield"))
    ell = context.option("center_dim")
    if ell is None:
        raise InputError("project needs --center-dim")
    certificate = project_field(X, V, W, int(ell), context.seed)

    report = _report(context)
    report.add("center_dim", certificate.ell)
    report.add("draw_seed", certificate.seed)
    report.add("e", certificate.multiplicity)
    report.add("r", certificate.regularity)
    report.add("field_degree", X.degree)
    report.add("projected_degree", certificate.field.degree)
    report.add("eliminant", format_polynomial(certificate.eliminant))
    report.add("multiplier", format_polynomial(certificate.multiplier))
    report.add("projected_ideal", _polys(certificate.projected_ideal.generators))
    report.add("projected_variety", _polys(certificate.projected_variety.generators))
    report.add("projected_field", _field_text(certificate.field))
    report.add("fallback", certificate.used_fallback)
    for name, flag in certificate.flags.items():
        report.add(f"check_{name}", _status(flag), machine=flag)
    report.add("invariance", _status(certificate.flags.get("field_invariant", False)))
    report.add("certificate", _status(certificate.verified))
    report.exit_code = ExitCode.AFFIRMATIVE if certificate.verified else ExitCode.NEGATIVE
    return report


def _degree_list(problem: ProblemFile, option: str | None) -> tuple[int, ...]:
    if option is None or option in problem.degrees:
        return problem.degree_list(option)
    try:
        return tuple(int(part) for part in option.split(","))
    except ValueError as exc:
        raise InputError(f"--degrees expects a degree list name or integers, got {option!r}") from exc


def _bound(context: CommandContext, problem: ProblemFile) -> BoundReport:
    theorem = TheoremTag(context.option("theorem"))
    seed = context.seed
    X = problem.vfield(context.option("vfield"))
    if theorem == TheoremTag.THEOREM_8:
        return theorem8_verdict(problem.poly(context.option("poly")), X, seed)
    C = problem.ideal(context.option("ideal"))
    if theorem == TheoremTag.THEOREM_18:
        acm_name = context.option("acm_ideal")
        Cprime = problem.ideal(acm_name) if acm_name is not None else C
        return theorem18_verdict(C, Cprime, X, seed)
    if theorem == TheoremTag.THEOREM_1:
        return theorem1_verdict(C, X, seed)
    if theorem == TheoremTag.COROLLARY_2:
        return corollary2_verdict(_degree_list(problem, context.option("degrees")), C, X, seed)
    if theorem == TheoremTag.THEOREM_3:
        surface = context.option("surface")
        if surface is None:
            raise InputError("--theorem 3 needs --surface")
        Z = problem.ideal(surface)
        return theorem3_verdict(C, Z, problem.poly(context.option("poly")), X, seed)
    s = context.option("dim")
    if s is None:
        s = hilbert_data(C).dimension
    return theorem1star_verdict(C, X, int(s), seed)


@register_command("bounds")
def handle_bounds(context: CommandContext) -> CommandReport:
    """Check one inequality and print its hypothesis checklist."""
    problem = load_problem(context)
    bound = _bound(context, problem)

    report = _report(context)
    report.add("theorem", str(bound.theorem))
    report.add("inequality", bound.inequality)
    for key, value in bound.inputs.items():
        report.add(key, value)
    for check in bound.hypotheses:
        detail = f" ({check.detail})" if check.detail else ""
        report.add(
            f"hypothesis_{check.name}",
            f"{check.status}{detail}",
            machine={"status": str(check.status), "detail": check.detail},
        )
    report.add("lhs", bound.lhs)
    report.add("rhs", bound.rhs)
    report.add("reducibility", str(bound.reducibility))
    report.add("characteristic_divides", bound.characteristic_divides)
    report.add("verdict", str(bound.verdict))
    report.exit_code = bound.exit_code
    return report


def _family_params(context: CommandContext) -> dict[str, object]:
    params: dict[str, object] = {}
    for key in ("d", "p", "n", "a", "b"):
        value = context.option(key)
        if value is not None:
            params[key] = value
    degrees = context.option("degrees")
    if degrees is not None:
        try:
            params["degrees"] = tuple(int(part) for part in degrees.split(","))
        except ValueError as exc:
            raise InputError(f"--degrees expects integers, got {degrees!r}") from exc
    return params


def instance_problem(instance: CorpusInstance) -> ProblemFile:
    """Problem file holding every object of a corpus instance."""
    ring = instance.ring
    problem = ProblemFile(ring.characteristic, ring.nvars)
    problem.ideals["V"] = instance.ideal.generators
    if instance.acm_ideal is not None:
        problem.ideals["W"] = instance.acm_ideal.generators
    if instance.surface is not None:
        problem.ideals["Z"] = instance.surface.generators
    problem.fields["X"] = instance.field.coefficients
    if instance.polynomial is not None:
        problem.polys["F"] = instance.polynomial
    if instance.hypersurface is not None:
        problem.polys["H"] = instance.hypersurface
    if instance.degrees is not None:
        problem.degrees["D"] = instance.degrees
    return problem


@register_command("corpus")
def handle_corpus(context: CommandContext) -> CommandReport:
    """
    Print a corpus instance as a problem file.

    The report lines become comments, so the output can be piped into any
    other subcommand. With `verify`, every expected fact is recomputed.
    """
    family = context.option("family")
    instance = corpus(family, **_family_params(context))

    report = _report(context)
    report.add("family", instance.name)
    for key, value in instance.parameters.items():
        report.add(f"param_{key}", value)
    for key, value in instance.expected.model_dump(exclude_none=True).items():
        report.add(f"expected_{key}", value)
    if instance.notes:
        report.add("notes", "; ".join(instance.notes), machine=list(instance.notes))
    if context.option("verify", False):
        comparisons = recompute_facts(instance, context.seed)
        for fact in comparisons:
            report.add(
                f"recomputed_{fact.name}",
                f"{fact.actual} ({'agrees' if fact.agrees else 'disagrees'})",
                machine=fact.actual,
            )
        disagreements = [fact.name for fact in comparisons if not fact.agrees]
        if disagreements:
            logger.warning("Corpus facts disagree", extra={"family": family, "facts": disagreements})
            report.exit_code = ExitCode.NEGATIVE
    report.problem_text = format_problem(instance_problem(instance))
    return report


@register_command("q-invariant")
def handle_q_invariant(context: CommandContext) -> CommandReport:
    """Minimal degree of a nonzero field leaving a hypersurface invariant."""
    problem = load_problem(context)
    F = problem.poly(context.option("poly"))
    X = minimal_invariant_field(F)

    report = _report(context)
    report.add("degree", homogeneous_degree(F))
    report.add("q", X.degree)
    report.add("witness_field", _field_text(X))
    return report


@register_command("singular-scheme")
def handle_singular_scheme(context: CommandContext) -> CommandReport:
    """Saturated ideal of the 2x2 minors of the field."""
    problem = load_problem(context)
    X = problem.vfield(context.option("vfield"))
    sigma = singular_scheme(X)
    data = hilbert_data(sigma)

    report = _report(context)
    report.add("field", X.name)
    report.add("field_degree", X.degree)
    report.add("generators", _polys(sigma.reduced_basis()))
    report.add("dimension", data.dimension)
    report.add("degree", data.degree)
    return report


@register_command("koszul")
def handle_koszul(context: CommandContext) -> CommandReport:
    """Write a field leaving a smooth hypersurface invariant as a trivial field."""
    problem = load_problem(context)
    F = problem.poly(context.option("poly"))
    X = problem.vfield(context.option("vfield"))
    P = koszul_decompose(X, F)

    report = _report(context)
    for (i, j), entry in sorted(P.items()):
        if entry:
            report.add(f"P_{i}_{j}", format_polynomial(entry))
    report.add("round_trip", _status(trivial_field(F, P).equivalent(X)))
    return report


@register_command("nodal")
def handle_nodal(context: CommandContext) -> CommandReport:
    """Singularity type of a plane curve."""
    problem = load_problem(context)
    F = problem.poly(context.option("poly"))
    diagnosis = nodal_diagnostic(F, context.seed)

    report = _report(context)
    report.add("singular_scheme", _polys(diagnosis.singular_scheme.reduced_basis()))
    report.add("tjurina", diagnosis.tjurina)
    if diagnosis.seeds:
        report.add(
            "points_seen",
            ", ".join(f"{s}:{'-' if c is None else c}" for s, c in diagnosis.seeds),
            machine=[list(pair) for pair in diagnosis.seeds],
        )
    report.add("verdict", str(diagnosis.verdict))
    report.exit_code = {
        NodalVerdict.NOT_NODAL: ExitCode.NEGATIVE,
        NodalVerdict.INDETERMINATE: ExitCode.INDETERMINATE,
    }.get(diagnosis.verdict, ExitCode.AFFIRMATIVE)
    return report


@register_command("tangency")
def handle_tangency(context: CommandContext) -> CommandReport:
    """Degree of the tangency divisor of a field along a hyperplane."""
    problem = load_problem(context)
    X = problem.vfield(context.option("vfield"))
    L = problem.poly(context.option("poly"))

    report = _report(context)
    report.add("field_degree", X.degree)
    report.add("hyperplane", format_polynomial(L))
    report.add("tangency_degree", tangency_degree(X, L))
    return report
