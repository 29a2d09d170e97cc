"""
Command line interface: problem-file grammar, subcommands and the entry point.
"""

from src.cli.commands import get_command, list_commands, register_command
from src.cli.grammar import ProblemFile, format_polynomial, format_problem, parse, tokenize
from src.cli.main import build_parser, run

__all__ = [
    "get_command",
    "list_commands",
    "register_command",
    "ProblemFile",
    "format_polynomial",
    "format_problem",
    "parse",
    "tokenize",
    "build_parser",
    "run",
]
