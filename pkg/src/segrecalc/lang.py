"""The ideal-definition input language.

A source program declares exactly one ring, then names ideals and points:

    # a nodal plane cubic and its singular point
    ring P vars x y z ;
    ideal C = y^2*z - x^3 - x^2*z ;
    ideal N = x , y ;
    point node = ( 0 : 0 : 1 ) ;

Polynomial expressions use + - * ^ with integer or p/q rational literals and
parentheses; multiplication is always explicit.  Comments run from ``#`` to
the end of the line.  Identifiers must be defined before use and homogeneity
is checked at the point of use, not at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    DuplicateDefinitionError,
    NoRingError,
    SourceError,
    UndefinedIdentifierError,
)
from .groebner import Ideal
from .polyring import Polynomial, Ring


class Token(NamedTuple):
    kind: str  # "ident" | "int" | "punct" | "end"
    text: str
    line: int
    col: int


_PUNCT = {";", ",", "=", "(", ")", ":", "+", "-", "*", "^", "/"}


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(Token("ident", source[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise SourceError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("end", "", line, col))
    return tokens


@dataclass
class SourceProgram:
    """One ring plus named ideals and points, in declaration order."""

    ring: Ring
    ideals: dict[str, Ideal] = field(default_factory=dict)
    points: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)

    def pretty(self) -> str:
        """Canonical rendering; reparsing it reproduces an equal program."""
        lines = [f"ring {self.ring.name} vars {' '.join(self.ring.variables)} ;"]
        for name, ideal in self.ideals.items():
            gens = " , ".join(g.format() for g in ideal.generators) or "0"
            lines.append(f"ideal {name} = {gens} ;")
        for name, coords in self.points.items():
            inner = " : ".join(_rat_str(c) for c in coords)
            lines.append(f"point {name} = ( {inner} ) ;")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SourceProgram)
            and self.ring == other.ring
            and self.ideals == other.ideals
            and self.points == other.points
        )


def _rat_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "end":
            self.pos += 1
        return t

    def fail(self, message: str, cls=SourceError):
        t = self.tok
        raise cls(message, t.line, t.col)

    def expect_punct(self, text: str) -> Token:
        t = self.tok
        if t.kind != "punct" or t.text != text:
            self.fail(f"expected {text!r}, found {t.text!r}" if t.text else f"expected {text!r}")
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> Token:
        t = self.tok
        if t.kind != "ident":
            self.fail(f"expected {what}, found {t.text!r}" if t.text else f"expected {what}")
        return self.advance()

    # -- program structure ---------------------------------------------------

    def parse_program(self) -> SourceProgram:
        ring: Ring | None = None
        ideals: dict[str, Ideal] = {}
        points: dict[str, tuple[Fraction, ...]] = {}
        names: set[str] = set()
        while self.tok.kind != "end":
            t = self.tok
            if t.kind != "ident" or t.text not in ("ring", "ideal", "point"):
                self.fail("expected a 'ring', 'ideal' or 'point' declaration")
            if t.text == "ring":
                if ring is not None:
                    self.fail("duplicate ring declaration", DuplicateDefinitionError)
                ring = self.parse_ring()
                names.update(ring.variables)
                names.add(ring.name)
            else:
                if ring is None:
                    self.fail(f"no ring in scope for {t.text} declaration", NoRingError)
                kind = self.advance().text
                name_tok = self.expect_ident("a name")
                if name_tok.text in names:
                    raise DuplicateDefinitionError(
                        f"name {name_tok.text!r} is already defined", name_tok.line, name_tok.col
                    )
                self.expect_punct("=")
                if kind == "ideal":
                    ideals[name_tok.text] = self.parse_ideal_body(ring)
                else:
                    points[name_tok.text] = self.parse_point_body(ring)
                names.add(name_tok.text)
        if ring is None:
            raise NoRingError("program declares no ring", 1, 1)
        return SourceProgram(ring, ideals, points)

    def parse_ring(self) -> Ring:
        self.advance()  # 'ring'
        name = self.expect_ident("a ring name")
        kw = self.expect_ident("'vars'")
        if kw.text != "vars":
            raise SourceError("expected 'vars'", kw.line, kw.col)
        variables = []
        while self.tok.kind == "ident":
            variables.append(self.advance().text)
        if not variables:
            self.fail("a ring needs at least one variable")
        self.expect_punct(";")
        try:
            return Ring(name.text, tuple(variables))
        except Exception as exc:
            raise SourceError(str(exc), name.line, name.col) from exc

    def parse_ideal_body(self, ring: Ring) -> Ideal:
        gens = [self.parse_polyexpr(ring)]
        while self.tok.text == ",":
            self.advance()
            gens.append(self.parse_polyexpr(ring))
        self.expect_punct(";")
        return Ideal(ring, tuple(gens))

    def parse_point_body(self, ring: Ring) -> tuple[Fraction, ...]:
        self.expect_punct("(")
        coords = [self.parse_rational()]
        while self.tok.text == ":":
            self.advance()
            coords.append(self.parse_rational())
        close = self.tok
        self.expect_punct(")")
        self.expect_punct(";")
        if len(coords) != ring.nvars:
            raise SourceError(
                f"point has {len(coords)} coordinates, ring has {ring.nvars} variables",
                close.line,
                close.col,
            )
        return tuple(coords)

    def parse_rational(self) -> Fraction:
        sign = 1
        while self.tok.text == "-":
            self.advance()
            sign = -sign
        t = self.tok
        if t.kind != "int":
            self.fail("expected a number")
        self.advance()
        num = int(t.text)
        if self.tok.text == "/":
            self.advance()
            d = self.tok
            if d.kind != "int":
                self.fail("expected a denominator")
            self.advance()
            if int(d.text) == 0:
                raise SourceError("zero denominator", d.line, d.col)
            return Fraction(sign * num, int(d.text))
        return Fraction(sign * num)

    # -- polynomial expressions ------------------------------------------------

    def parse_polyexpr(self, ring: Ring) -> Polynomial:
        acc = self.parse_term(ring)
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.parse_term(ring)
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_term(self, ring: Ring) -> Polynomial:
        acc = self.parse_factor(ring)
        while self.tok.text == "*":
            self.advance()
            acc = acc * self.parse_factor(ring)
        return acc

    def parse_factor(self, ring: Ring) -> Polynomial:
        if self.tok.text == "-":
            self.advance()
            return -self.parse_factor(ring)
        base = self.parse_atom(ring)
        while self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "int":
                self.fail("expected an integer exponent")
            self.advance()
            base = base ** int(t.text)
        return base

    def parse_atom(self, ring: Ring) -> Polynomial:
        t = self.tok
        if t.text == "(":
            self.advance()
            inner = self.parse_polyexpr(ring)
            self.expect_punct(")")
            return inner
        if t.kind == "int":
            self.advance()
            num = int(t.text)
            if self.tok.text == "/":
                self.advance()
                d = self.tok
                if d.kind != "int":
                    self.fail("expected a denominator")
                self.advance()
                if int(d.text) == 0:
                    raise SourceError("zero denominator", d.line, d.col)
                return Polynomial.constant(ring, Fraction(num, int(d.text)))
            return Polynomial.constant(ring, num)
        if t.kind == "ident":
            if t.text not in ring.variables:
                raise UndefinedIdentifierError(
                    f"undefined identifier {t.text!r}", t.line, t.col
                )
            self.advance()
            return Polynomial.variable(ring, t.text)
        self.fail("expected a variable, number or parenthesized expression")


def parse_source(text: str) -> SourceProgram:
    """Parse a program; raises SourceError subclasses with line/column."""
    return _Parser(tokenize(text)).parse_program()
