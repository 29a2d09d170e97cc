"""
Command-line entry point.

Reports go to standard output, diagnostics and logs to standard error. The
exit code is the report's verdict code, or the code carried by the error
that stopped the command.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from src.bounds.corpus import list_families
from src.cli.commands import get_command
from src.config import get_settings
from src.constants import SPAN_CLI_COMMAND, ExitCode, TheoremTag
from src.errors import InputError, InvariantRegularityError
from src.observability.logging import bind_context, clear_context, setup_logging
from src.observability.metrics import get_metrics
from src.observability.tracing import create_span, setup_tracing
from src.types.command import CommandContext

logger = logging.getLogger(__name__)

# Subcommands that read no problem file
_NO_INPUT = frozenset({"corpus"})


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors raise instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise InputError(message)


def _common(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument(
            "-i", "--input", help="problem file (standard input when omitted or '-')"
        )
    parser.add_argument("--seed", type=int, default=None, help="seed of the first random draw")
    parser.add_argument("--json", action="store_true", help="append a machine-readable block")


def build_parser() -> ArgumentParser:
    """Build the argument parser with every subcommand."""
    parser = ArgumentParser(
        prog="invreg",
        description="Invariance, regularity and central projection of polynomial vector fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("check-invariance", help="does a field leave a scheme invariant")
    _common(p)
    p.add_argument("--ideal")
    p.add_argument("--vfield")

    p = sub.add_parser("regularity", help="regularity of an ACM ideal")
    _common(p)
    p.add_argument("--ideal")

    p = sub.add_parser("acm", help="arithmetically Cohen-Macaulay test")
    _common(p)
    p.add_argument("--ideal")

    p = sub.add_parser("project", help="project a field from a generic center")
    _common(p)
    p.add_argument("--ideal")
    p.add_argument("--acm-ideal", dest="acm_ideal")
    p.add_argument("--vfield")
    p.add_argument("--center-dim", dest="center_dim", type=int, required=True)

    p = sub.add_parser("bounds", help="check a degree bound with its hypotheses")
    _common(p)
    p.add_argument("--theorem", required=True, choices=[str(t) for t in TheoremTag])
    p.add_argument("--ideal")
    p.add_argument("--acm-ideal", dest="acm_ideal")
    p.add_argument("--vfield")
    p.add_argument("--degrees", help="degree list name, or integers like 2,3")
    p.add_argument("--surface")
    p.add_argument("--poly")
    p.add_argument("--dim", type=int)

    p = sub.add_parser("corpus", help="print a built-in example as a problem file")
    _common(p, with_input=False)
    p.add_argument("family", choices=list_families())
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--degrees", help="integers like 2,3")
    p.add_argument("--verify", action="store_true", help="recompute every expected fact")

    p = sub.add_parser("q-invariant", help="minimal degree of an invariant field")
    _common(p)
    p.add_argument("--poly")

    p = sub.add_parser("singular-scheme", help="singular scheme of a field")
    _common(p)
    p.add_argument("--vfield")

    p = sub.add_parser("koszul", help="Koszul decomposition on a smooth hypersurface")
    _common(p)
    p.add_argument("--poly")
    p.add_argument("--vfield")

    p = sub.add_parser("nodal", help="singularity type of a plane curve")
    _common(p)
    p.add_argument("--poly")

    p = sub.add_parser("tangency", help="tangency degree along a hyperplane")
    _common(p)
    p.add_argument("--vfield")
    p.add_argument("--poly")

    return parser


def _read_problem(args: argparse.Namespace) -> str | None:
    if args.command in _NO_INPUT:
        return None
    source = getattr(args, "input", None)
    if source is None or source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from exc


def _execute(args: argparse.Namespace, seed: int) -> int:
    handler = get_command(args.command)
    if handler is None:
        raise InputError(f"unknown command {args.command!r}")
    options = {k: v for k, v in vars(args).items() if k not in ("command", "input", "seed", "json")}
    context = CommandContext(args.command, seed, options, _read_problem(args))
    with create_span(SPAN_CLI_COMMAND, command=args.command, seed=seed):
        report = handler(context)
    sys.stdout.write(report.render(args.json))
    return int(report.exit_code)


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line tool.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None).

    Returns:
        Exit code: 0 affirmative, 1 negative, 2 indeterminate, 3 input error.
    """
    settings = get_settings()
    setup_logging()
    if settings.trace_console:
        setup_tracing(enable_console_export=True)

    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitCode.INPUT_ERROR)
    except SystemExit as exc:
        return int(exc.code or 0)

    seed = settings.default_seed if args.seed is None else args.seed
    bind_context(command=args.command, seed=seed)
    try:
        return _execute(args, seed)
    except InvariantRegularityError as exc:
        logger.info("Command failed", extra={"error": type(exc).__name__})
        print(f"error: {exc}", file=sys.stderr)
        return int(exc.exit_code)
    finally:
        clear_context()
        if settings.metrics_file:
            get_metrics().write_textfile(settings.metrics_file)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
