"""
Problem-file grammar.

A problem file is a sequence of statements, one per line (a line ending in
a comma, or an open bracket, continues on the next line)::

    # twisted cubic and its diagonal field
    char 0
    ring t0..t3
    ideal C = t1*t2 - t0*t3, t1^2 - t0*t2, t2^2 - t1*t3
    field X = [3*t0, t1, -t2, -3*t3]
    poly H = t1^2 - t0*t2
    degrees D = 2, 3

Coefficients are integers or fractions; division is only by nonzero
constants of the field.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass, field

from src.algebra.polynomial import degree_and_homogeneity
from src.algebra.ring import Polynomial, Ring
from src.algebra.scalars import field_for, scalar_to_str
from src.config import get_settings
from src.constants import VARIABLE_PREFIX
from src.errors import InputError, InvariantRegularityError, ParseError
from src.groebner.ideal import Ideal
from src.vfield.field import VectorField

KEYWORDS = ("char", "ring", "ideal", "field", "poly", "degrees")

_TOKEN = re.compile(
    r"""
    (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<space>[ \t\r]+)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<range>\.\.)
  | (?P<power>\*\*|\^)
  | (?P<op>[-+*/=,;\[\]()])
    """,
    re.VERBOSE,
)

_VARIABLE = re.compile(rf"{VARIABLE_PREFIX}(\d+)")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    """
    Split problem text into tokens.

    Newlines inside brackets, parentheses or after a comma are dropped;
    `;` also ends a statement.

    Raises:
        ParseError: On a character outside the grammar.
    """
    tokens: list[Token] = []
    depth = 0
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup or ""
        value = match.group()
        pos = match.end()
        if kind == "newline":
            continued = depth > 0 or (tokens and tokens[-1].text == ",")
            if not continued and tokens and tokens[-1].kind != "end":
                tokens.append(Token("end", "\n", line, column))
            line, line_start = line + 1, pos
            continue
        if kind in ("comment", "space"):
            continue
        if value in ("(", "["):
            depth += 1
        elif value in (")", "]"):
            depth = max(depth - 1, 0)
        if value == ";":
            if tokens and tokens[-1].kind != "end":
                tokens.append(Token("end", ";", line, column))
            continue
        if kind == "power":
            value = "^"
        tokens.append(Token(kind, value, line, column))
    if tokens and tokens[-1].kind != "end":
        tokens.append(Token("end", "", line, pos - line_start + 1))
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class ProblemFile:
    """
    Parsed problem: a ring and named ideals, fields, polynomials and degree lists.

    Polynomials are kept as written (zero generators included) so that
    printing and reparsing gives an equal problem.
    """

    characteristic: int
    nvars: int
    ideals: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    fields: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    polys: dict[str, Polynomial] = field(default_factory=dict)
    degrees: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def ring(self) -> Ring:
        return Ring(self.nvars, self.characteristic)

    @staticmethod
    def _pick(kind: str, table: dict, name: str | None) -> str:
        if name is None:
            if len(table) != 1:
                available = ", ".join(table) or "none"
                raise InputError(f"name the {kind} to use (available: {available})")
            return next(iter(table))
        if name not in table:
            raise InputError(f"no {kind} named {name!r}")
        return name

    def ideal(self, name: str | None = None) -> Ideal:
        """The named ideal (the only one when name is None)."""
        key = self._pick("ideal", self.ideals, name)
        return Ideal(self.ring, self.ideals[key], name=key)

    def vfield(self, name: str | None = None) -> VectorField:
        key = self._pick("field", self.fields, name)
        return VectorField.of(self.ring, self.fields[key], name=key)

    def poly(self, name: str | None = None) -> Polynomial:
        key = self._pick("poly", self.polys, name)
        return self.polys[key]

    def degree_list(self, name: str | None = None) -> tuple[int, ...]:
        key = self._pick("degree list", self.degrees, name)
        return self.degrees[key]


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.characteristic: int | None = None
        self.ring: Ring | None = None
        self.problem: ProblemFile | None = None
        self.names: set[str] = set()

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = repr(text) if text is not None else kind
            found = repr(token.text) if token.text.strip() else "end of statement"
            raise self.error(f"expected {wanted}, found {found}")
        return self.advance()

    def parse(self) -> ProblemFile:
        while self.current.kind != "eof":
            self.statement()
            self.expect("end")
        if self.problem is None:
            raise self.error("missing ring declaration")
        return self.problem

    def statement(self) -> None:
        keyword = self.expect("name")
        if keyword.text not in KEYWORDS:
            raise self.error(f"unknown statement {keyword.text!r}", keyword)
        if keyword.text == "char":
            self.char_statement(keyword)
        elif keyword.text == "ring":
            self.ring_statement(keyword)
        else:
            if self.problem is None:
                raise self.error("declare the ring before using it", keyword)
            name = self.declared_name()
            self.expect("op", "=")
            if keyword.text == "ideal":
                self.problem.ideals[name] = tuple(self.generator_list(name))
            elif keyword.text == "field":
                self.problem.fields[name] = self.field_body(name)
            elif keyword.text == "poly":
                self.problem.polys[name] = self.homogeneous(f"poly {name}")
            else:
                self.problem.degrees[name] = self.integer_list()

    def char_statement(self, keyword: Token) -> None:
        if self.characteristic is not None or self.problem is not None:
            raise self.error("char must come once, before the ring", keyword)
        token = self.expect("number")
        try:
            field_for(int(token.text))
        except InvariantRegularityError as exc:
            raise self.error(str(exc), token) from exc
        self.characteristic = int(token.text)

    def ring_statement(self, keyword: Token) -> None:
        if self.problem is not None:
            raise self.error("ring declared twice", keyword)
        first = self.expect("name")
        if first.text != f"{VARIABLE_PREFIX}0":
            raise self.error(f"variables must start at {VARIABLE_PREFIX}0", first)
        self.expect("range")
        last = self.expect("name")
        match = _VARIABLE.fullmatch(last.text)
        if match is None:
            raise self.error(f"expected a variable {VARIABLE_PREFIX}N", last)
        if self.characteristic is None:
            self.characteristic = get_settings().default_characteristic
        self.ring = Ring(int(match.group(1)) + 1, self.characteristic)
        self.problem = ProblemFile(self.characteristic, self.ring.nvars)

    def declared_name(self) -> str:
        token = self.expect("name")
        if token.text in KEYWORDS or _VARIABLE.fullmatch(token.text):
            raise self.error(f"{token.text!r} cannot be used as a name", token)
        if token.text in self.names:
            raise self.error(f"{token.text!r} is already defined", token)
        self.names.add(token.text)
        return token.text

    def integer_list(self) -> tuple[int, ...]:
        values = [int(self.expect("number").text)]
        while self.current.text == ",":
            self.advance()
            values.append(int(self.expect("number").text))
        return tuple(values)

    def generator_list(self, name: str) -> Iterator[Polynomial]:
        index = 1
        yield self.homogeneous(f"generator {index} of ideal {name}", allow_zero=True)
        while self.current.text == ",":
            self.advance()
            index += 1
            yield self.homogeneous(f"generator {index} of ideal {name}", allow_zero=True)

    def field_body(self, name: str) -> tuple[Polynomial, ...]:
        open_bracket = self.expect("op", "[")
        coefficients = [self.expression()]
        while self.current.text == ",":
            self.advance()
            coefficients.append(self.expression())
        self.expect("op", "]")
        assert self.ring is not None
        try:
            VectorField.of(self.ring, coefficients)
        except InvariantRegularityError as exc:
            raise self.error(f"field {name}: {exc}", open_bracket) from exc
        return tuple(coefficients)

    def homogeneous(self, label: str, allow_zero: bool = False) -> Polynomial:
        start = self.current
        f = self.expression()
        ok, _ = degree_and_homogeneity(f)
        if not ok:
            raise self.error(f"{label} is not homogeneous", start)
        if not f and not allow_zero:
            raise self.error(f"{label} is zero", start)
        return f

    def expression(self) -> Polynomial:
        assert self.ring is not None
        sign = 1
        if self.current.kind == "op" and self.current.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        result = self.term() * sign
        while self.current.kind == "op" and self.current.text in ("+", "-"):
            op = self.advance().text
            value = self.term()
            result = result + value if op == "+" else result - value
        return result

    def starts_factor(self) -> bool:
        token = self.current
        return token.kind in ("number", "name") or token.text == "("

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.current.text == "*":
                self.advance()
                result *= self.factor()
            elif self.current.text == "/":
                slash = self.advance()
                divisor = self.factor()
                if not divisor.is_ground or not divisor:
                    raise self.error(
                        "division is only allowed by a nonzero constant of the field", slash
                    )
                result = result.quo_ground(divisor.LC)
            elif self.starts_factor():
                result *= self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.primary()
        if self.current.kind == "power":
            self.advance()
            exponent = int(self.expect("number").text)
            return base**exponent
        return base

    def primary(self) -> Polynomial:
        assert self.ring is not None
        token = self.current
        if token.kind == "number":
            self.advance()
            return self.ring.constant(int(token.text))
        if token.kind == "name":
            match = _VARIABLE.fullmatch(token.text)
            if match is None:
                raise self.error(f"unknown symbol {token.text!r}", token)
            index = int(match.group(1))
            if index >= self.ring.nvars:
                raise self.error(
                    f"{token.text} is not a variable of the ring t0..t{self.ring.n}", token
                )
            self.advance()
            return self.ring.gens[index]
        if token.text == "(":
            self.advance()
            inner = self.expression()
            self.expect("op", ")")
            return inner
        found = repr(token.text) if token.text.strip() else "end of statement"
        raise self.error(f"expected a polynomial, found {found}", token)


def parse(text: str) -> ProblemFile:
    """
    Parse problem text.

    Raises:
        ParseError: With the line and column of the first error.
    """
    return _Parser(tokenize(text)).parse()


def format_polynomial(f: Polynomial) -> str:
    """Canonical text of a polynomial: terms in decreasing grevlex order."""
    if not f:
        return "0"
    domain = f.ring.domain
    pieces: list[str] = []
    for monom, coeff in f.terms():
        text = scalar_to_str(domain, coeff)
        negative = text.startswith("-")
        text = text.lstrip("-")
        factors = [
            f"{VARIABLE_PREFIX}{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(monom)
            if e
        ]
        if text != "1" or not factors:
            factors.insert(0, text if "/" not in text or not factors else f"({text})")
        body = "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"{'- ' if negative else '+ '}{body}")
    return " ".join(pieces)


def format_problem(problem: ProblemFile) -> str:
    """Problem text that parses back to an equal problem."""
    lines = [f"char {problem.characteristic}", f"ring {VARIABLE_PREFIX}0..{VARIABLE_PREFIX}{problem.nvars - 1}"]
    for name, gens in problem.ideals.items():
        lines.append(f"ideal {name} = " + ", ".join(format_polynomial(g) for g in gens))
    for name, coeffs in problem.fields.items():
        lines.append(f"field {name} = [" + ", ".join(format_polynomial(c) for c in coeffs) + "]")
    for name, f in problem.polys.items():
        lines.append(f"poly {name} = {format_polynomial(f)}")
    for name, values in problem.degrees.items():
        lines.append(f"degrees {name} = " + ", ".join(str(v) for v in values))
    return "\n".join(lines) + "\n"

