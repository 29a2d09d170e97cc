"""
Unit tests for the problem-file grammar.
"""

from fractions import Fraction

import pytest

from src.algebra.ring import Ring
from src.algebra.scalars import scalar
from src.cli.grammar import format_polynomial, format_problem, parse, tokenize
from src.errors import InputError, ParseError


class TestTokenize:
    """Tests for the tokenizer."""

    def test_continuation_after_comma(self):
        """A trailing comma continues the statement."""
        tokens = tokenize("ideal I = t0,\n  t1\n")
        assert [t.kind for t in tokens].count("end") == 1

    def test_power_spellings(self):
        """** and ^ are the same operator."""
        kinds = [(t.kind, t.text) for t in tokenize("t0**2 t1^3")]
        assert kinds.count(("power", "^")) == 2

    def test_semicolon_ends_statement(self):
        """Two statements on one line."""
        tokens = tokenize("char 0; ring t0..t2")
        assert [t.text for t in tokens if t.kind == "end"] == [";", ""]

    def test_bad_character(self):
        """Characters outside the grammar are reported with their position."""
        with pytest.raises(ParseError) as excinfo:
            tokenize("ring t0..t2\nideal I = t0 $ t1\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 14)


class TestParse:
    """Tests for the parser."""

    def test_twisted_cubic(self, twisted_cubic_text: str, twisted_cubic):
        """The shared example parses to the fixture objects."""
        problem = parse(twisted_cubic_text)
        assert problem.ring == Ring.projective(3)
        assert problem.ideal() == twisted_cubic
        assert problem.vfield().coefficients[0] == 3 * problem.ring.gens[0]

    def test_implicit_multiplication(self):
        """2t0 t1 means 2*t0*t1."""
        problem = parse("ring t0..t1\npoly F = 2t0 t1\n")
        t0, t1 = problem.ring.gens
        assert problem.poly() == 2 * t0 * t1

    def test_default_characteristic(self):
        """Without a char statement the ring is rational."""
        assert parse("ring t0..t2\n").characteristic == 0

    def test_fractions(self):
        """Division by constants is allowed."""
        problem = parse("char 5\nring t0..t1\npoly F = t0/2 + t1\n")
        t0, t1 = problem.ring.gens
        assert problem.poly() == 3 * t0 + t1

    def test_zero_generator_kept(self):
        """Zero generators are allowed in ideals."""
        problem = parse("ring t0..t2\nideal I = 0, t0\n")
        assert len(problem.ideals["I"]) == 2

    def test_degrees(self):
        """Degree lists are integers."""
        assert parse("ring t0..t3\ndegrees D = 2, 3\n").degree_list() == (2, 3)

    def test_unknown_variable(self):
        """Variables beyond the ring are errors at their position."""
        with pytest.raises(ParseError) as excinfo:
            parse("ring t0..t2\nideal I = t0 + t3\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 16)

    def test_inhomogeneous_generator(self):
        """Generators must be homogeneous."""
        with pytest.raises(ParseError) as excinfo:
            parse("ring t0..t2\nideal I = t0 + t1^2\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 11)
        assert "not homogeneous" in excinfo.value.message

    def test_field_arity(self):
        """A field on P^2 needs three coefficients."""
        with pytest.raises(ParseError) as excinfo:
            parse("ring t0..t2\nfield X = [t0, t1]\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 11)
        assert "needs 3 coefficients" in excinfo.value.message

    def test_division_by_zero_in_characteristic(self):
        """1/2 does not exist in characteristic 2."""
        with pytest.raises(ParseError) as excinfo:
            parse("char 2\nring t0..t2\npoly F = t0^2/2\n")
        assert (excinfo.value.line, excinfo.value.column) == (3, 14)

    def test_non_prime_characteristic(self):
        """char must be 0 or prime."""
        with pytest.raises(ParseError) as excinfo:
            parse("char 6\nring t0..t2\n")
        assert excinfo.value.line == 1

    def test_ring_must_come_first(self):
        """Objects need a ring."""
        with pytest.raises(ParseError):
            parse("ideal I = t0\n")

    def test_duplicate_name(self):
        """Names are unique across kinds."""
        with pytest.raises(ParseError):
            parse("ring t0..t2\nideal A = t0\npoly A = t1\n")

    def test_keyword_name(self):
        """Keywords and variables are not names."""
        with pytest.raises(ParseError):
            parse("ring t0..t2\nideal t1 = t0\n")

    def test_missing_ring(self):
        """An empty file has no ring."""
        with pytest.raises(ParseError):
            parse("# nothing\n")

    def test_ambiguous_object(self):
        """With two ideals the name is required."""
        problem = parse("ring t0..t2\nideal A = t0\nideal B = t1\n")
        with pytest.raises(InputError):
            problem.ideal()
        assert problem.ideal("B").generators == (problem.ring.gens[1],)


class TestFormat:
    """Tests for canonical printing."""

    def test_polynomial(self, p3: Ring):
        """Terms print in decreasing grevlex order."""
        t0, t1, t2, t3 = p3.gens
        assert format_polynomial(t1 * t2 - t0 * t3) == "t1*t2 - t0*t3"
        assert format_polynomial(-3 * t3) == "-3*t3"
        assert format_polynomial(p3.zero) == "0"

    def test_fraction_coefficient(self, p2: Ring):
        """Fractional coefficients are parenthesized."""
        t0 = p2.gens[0]
        assert format_polynomial(t0 * scalar(p2.domain, Fraction(3, 2))) == "(3/2)*t0"

    def test_residues(self):
        """Coefficients print as residues in characteristic p."""
        ring = Ring.projective(1, 5)
        t0, t1 = ring.gens
        assert format_polynomial(t0 - t1) == "t0 + 4*t1"

    def test_round_trip(self, twisted_cubic_text: str):
        """Printing and reparsing gives an equal problem."""
        text = twisted_cubic_text + "poly H = 3/2*t1^2 - t0*t2\ndegrees D = 2, 2\n"
        problem = parse(text)
        assert parse(format_problem(problem)) == problem
