"""
Command-related type definitions for the CLI.
"""

import json
from dataclasses import dataclass
from typing import Any

from pydantic import BaseModel, Field

from src.constants import ExitCode

# Marks a line whose machine value is the display value
_SAME: Any = object()


class CommandReport(BaseModel):
    """
    Result of one subcommand.

    Rendered as `key: value` lines in insertion order; the seed is always
    the second line. `data` holds the machine-readable block. A report that
    carries `problem_text` prints its lines as comments above the problem,
    so the output is itself a problem file.
    """

    command: str
    seed: int
    exit_code: ExitCode = ExitCode.AFFIRMATIVE
    lines: list[tuple[str, str]] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)
    problem_text: str | None = None

    def add(self, key: str, value: Any, machine: Any = _SAME) -> "CommandReport":
        """Append a line; booleans print as true/false."""
        text = str(value).lower() if isinstance(value, bool) else str(value)
        self.lines.append((key, text))
        self.data[key] = value if machine is _SAME else machine
        return self

    def render(self, with_json: bool = False) -> str:
        out = [f"command: {self.command}", f"seed: {self.seed}"]
        out.extend(f"{key}: {value}" for key, value in self.lines)
        out.append(f"exit_code: {int(self.exit_code)}")
        if with_json:
            block = {"command": self.command, "seed": self.seed, "exit_code": int(self.exit_code)}
            block.update(self.data)
            out.append("--- json")
            out.append(json.dumps(block, sort_keys=True, default=str))
        if self.problem_text is not None:
            return "".join(f"# {line}\n" for line in out) + self.problem_text
        return "\n".join(out) + "\n"


@dataclass
class CommandContext:
    """
    Context passed to subcommand handlers.

    Attributes:
        command: Subcommand name.
        seed: Seed of the first random draw.
        options: Parsed command-line options.
        problem_text: Raw problem text, None for commands that read no input.
    """

    command: str
    seed: int
    options: dict[str, Any]
    problem_text: str | None = None

    def option(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value
