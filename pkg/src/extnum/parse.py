"""Text syntax for external numbers and matrices.

Scalars are arithmetic expressions over exact rationals and the atoms

* ``eps``: the positive infinitesimal,
* ``o``: the infinitesimals, ``L``: the limited numbers,
* ``R``: the whole line, ``0n``: the zero neutrix,

combined with ``+ - * / ^`` and parentheses.  The unicode glyphs ``ε ⊘ £ ℝ``
are accepted too, and a glyph directly after a factor multiplies it.  Exponents must be constant
rationals; non-integer powers are allowed only for exact monomials such as
``eps^(1/2)``.  Matrices are written ``[[a, b], [c, d]]``.

>>> str(parse_scalar("3/2 * eps^(1/2) + eps*o"))
'3/2*eps^(1/2) + eps*o'
>>> parse_matrix("[[1+o, 0], [0, 1]]").shape
(2, 2)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .external import ExternalNumber, eadd, ediv, emul, eneg, esub, lift
from .matrix import FlexMatrix, FlexVector
from .neutrix import LINE, OSLASH, POUND, ZERO_N
from .nsreal import EPS, NSReal

__all__ = ["parse_scalar", "parse_matrix", "parse_vector", "render"]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<zn>0n\b)
  | (?P<num>\d+(?:\.\d+)?|\.\d+)
  | (?P<name>eps|ε|⊘|£|ℝ|[A-Za-z_]+)
  | (?P<op>[-+*/^(),\[\]])
    """,
    re.VERBOSE,
)

_ATOMS = {
    "eps": lambda: ExternalNumber(EPS),
    "ε": lambda: ExternalNumber(EPS),
    "o": lambda: lift(OSLASH),
    "⊘": lambda: lift(OSLASH),
    "L": lambda: lift(POUND),
    "£": lambda: lift(POUND),
    "R": lambda: lift(LINE),
    "ℝ": lambda: lift(LINE),
}

_GLYPHS = ("⊘", "£", "ℝ")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1] or 'end of input'!r}", self.text, t[2])
        return t

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.peek()[2])

    def done(self):
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")

    # grammar -------------------------------------------------------------

    def expr(self) -> ExternalNumber:
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = eadd(value, rhs) if op == "+" else esub(value, rhs)
        return value

    def term(self) -> ExternalNumber:
        value = self.unary()
        while True:
            if self.peek()[1] in _GLYPHS:
                # unicode output writes eps^2*o as ε^2⊘
                value = emul(value, self.power())
            elif self.peek()[1] in ("*", "/"):
                op = self.take()[1]
                rhs = self.unary()
                value = emul(value, rhs) if op == "*" else ediv(value, rhs)
            else:
                return value

    def unary(self) -> ExternalNumber:
        if self.peek()[1] == "-":
            self.take()
            return eneg(self.unary())
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> ExternalNumber:
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        tok = self.take()
        exponent = self.unary()
        if not (exponent.is_real and exponent.rep.is_standard()):
            raise ParseError("exponent must be a constant rational", self.text, tok[2])
        e = exponent.rep.to_fraction()
        if e.denominator == 1:
            if base.is_real:
                return ExternalNumber(base.rep ** e)
            return base ** int(e)
        if not base.is_real:
            raise ParseError("fractional powers need an exact base", self.text, tok[2])
        return ExternalNumber(base.rep ** e)

    def atom(self) -> ExternalNumber:
        kind, value, pos = self.take()
        if kind == "num":
            return ExternalNumber(Fraction(value))
        if kind == "zn":
            return lift(ZERO_N)
        if kind == "name":
            if value in _ATOMS:
                return _ATOMS[value]()
            raise ParseError(f"unknown symbol {value!r}", self.text, pos)
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", self.text, pos)

    def row(self) -> list:
        self.expect("[")
        items = [self.expr()]
        while self.peek()[1] == ",":
            self.take()
            items.append(self.expr())
        self.expect("]")
        return items

    def matrix(self) -> list:
        self.expect("[")
        rows = [self.row()]
        while self.peek()[1] == ",":
            self.take()
            rows.append(self.row())
        self.expect("]")
        return rows


def parse_scalar(text: str) -> ExternalNumber:
    p = _Parser(text)
    value = p.expr()
    p.done()
    return value


def parse_matrix(text: str) -> FlexMatrix:
    p = _Parser(text)
    rows = p.matrix()
    p.done()
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ParseError("rows have different lengths", text, 0)
    return FlexMatrix(rows)


def parse_vector(text: str) -> FlexVector:
    """A single bracketed row such as ``[1+o, eps*o]``."""
    p = _Parser(text)
    items = p.row()
    p.done()
    return FlexVector(items)


def render(value, unicode: bool = False) -> str:
    """Canonical text of a scalar, neutrix, vector or matrix."""
    if isinstance(value, (int, Fraction, NSReal)):
        value = ExternalNumber(value)
    return value.to_text(unicode)
