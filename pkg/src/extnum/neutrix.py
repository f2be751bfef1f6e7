"""The representable neutrix lattice.

A neutrix here is one of ``{0}``, ``eps^q * o`` (all ``x`` with ``v(x) > q``),
``eps^q * L`` (all ``x`` with ``v(x) >= q``) or the whole line ``R``.  These
are totally ordered by inclusion, which makes sums and several other
operations simple maxima.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .nsreal import NSReal, _coerce_coeff, _render_exp

__all__ = [
    "Base",
    "Neutrix",
    "ZERO_N",
    "LINE",
    "OSLASH",
    "POUND",
    "oslash",
    "pound",
    "nsum",
    "nmul",
    "scalar_mul",
    "ndiv",
    "nleq",
    "hull",
]


class Base(enum.Enum):
    OSLASH = "o"
    POUND = "L"


class Neutrix:
    __slots__ = ("kind", "q", "base", "_key")

    def __init__(self, kind: str, q: Fraction | None = None, base: Base | None = None):
        if kind not in ("zero", "mono", "line"):
            raise ValueError(f"unknown neutrix kind {kind!r}")
        if kind == "mono":
            if base is None or q is None:
                raise ValueError("a monomial neutrix needs a scale and a base")
            q = _coerce_coeff(q)
            key = (1, -q, 0 if base is Base.OSLASH else 1)
        else:
            q, base = None, None
            key = (0,) if kind == "zero" else (2,)
        self.kind = kind
        self.q = q
        self.base = base
        self._key = key

    @classmethod
    def mono(cls, q, base: Base) -> Neutrix:
        return cls("mono", q, base)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def is_line(self) -> bool:
        return self.kind == "line"

    def contains(self, x) -> bool:
        """Membership of an exact real."""
        x = NSReal(x)
        if x.is_zero or self.kind == "line":
            return True
        if self.kind == "zero":
            return False
        v = x.valuation()
        return v > self.q if self.base is Base.OSLASH else v >= self.q

    __contains__ = contains

    def reduce(self, x: NSReal) -> NSReal:
        """Canonical representative of the coset ``x + self``.

        Drops every series term of ``x`` that already lies in the neutrix.
        """
        if self.kind == "zero":
            return x
        if self.kind == "line":
            return NSReal(0)
        return x.truncate(self.q, inclusive=self.base is Base.OSLASH)

    # inclusion order ------------------------------------------------------

    def __le__(self, other: Neutrix) -> bool:
        return self._key <= other._key

    def __lt__(self, other: Neutrix) -> bool:
        return self._key < other._key

    def __ge__(self, other: Neutrix) -> bool:
        return self._key >= other._key

    def __gt__(self, other: Neutrix) -> bool:
        return self._key > other._key

    def __eq__(self, other):
        if not isinstance(other, Neutrix):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    # algebra --------------------------------------------------------------

    def __add__(self, other: Neutrix) -> Neutrix:
        if not isinstance(other, Neutrix):
            return NotImplemented
        return nsum(self, other)

    def __mul__(self, other):
        if isinstance(other, Neutrix):
            return nmul(self, other)
        if isinstance(other, (NSReal, int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Neutrix):
            return ndiv(self, other)
        if isinstance(other, (NSReal, int, Fraction)):
            return scalar_mul(1 / NSReal(other), self)
        return NotImplemented

    def __neg__(self):
        return self

    # text -----------------------------------------------------------------

    def to_text(self, unicode: bool = False) -> str:
        if self.kind == "zero":
            return "{0}" if unicode else "0n"
        if self.kind == "line":
            return "ℝ" if unicode else "R"
        if unicode:
            sym = "⊘" if self.base is Base.OSLASH else "£"
            return sym if self.q == 0 else f"{_render_exp(self.q, True)}{sym}"
        sym = self.base.value
        return sym if self.q == 0 else f"{_render_exp(self.q, False)}*{sym}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Neutrix('{self.to_text()}')"


def oslash(q=0) -> Neutrix:
    """``eps^q`` times the infinitesimals."""
    return Neutrix.mono(q, Base.OSLASH)


def pound(q=0) -> Neutrix:
    """``eps^q`` times the limited numbers."""
    return Neutrix.mono(q, Base.POUND)


ZERO_N = Neutrix("zero")
LINE = Neutrix("line")
OSLASH = oslash()
POUND = pound()


def nleq(a: Neutrix, b: Neutrix) -> bool:
    """Inclusion ``a ⊆ b``."""
    return a <= b


def nsum(a: Neutrix, b: Neutrix) -> Neutrix:
    return b if a <= b else a


def nmin(a: Neutrix, b: Neutrix) -> Neutrix:
    return a if a <= b else b


def nmul(a: Neutrix, b: Neutrix) -> Neutrix:
    if a.kind == "zero" or b.kind == "zero":
        return ZERO_N
    if a.kind == "line" or b.kind == "line":
        return LINE
    base = Base.OSLASH if Base.OSLASH in (a.base, b.base) else Base.POUND
    return Neutrix.mono(a.q + b.q, base)


def scalar_mul(x, a: Neutrix) -> Neutrix:
    x = NSReal(x)
    if x.is_zero:
        return ZERO_N
    if a.kind != "mono":
        return a
    return Neutrix.mono(a.q + x.valuation(), a.base)


def ndiv(a: Neutrix, b: Neutrix) -> Neutrix:
    """The group quotient ``{c : c*b ⊆ a}``."""
    if b.kind == "zero" or a.kind == "line":
        return LINE
    if b.kind == "line" or a.kind == "zero":
        return ZERO_N
    exact = b.base is Base.OSLASH or a.base is Base.POUND
    return Neutrix.mono(a.q - b.q, Base.POUND if exact else Base.OSLASH)


def hull(x) -> Neutrix:
    """Smallest representable neutrix containing ``x``."""
    x = NSReal(x)
    if x.is_zero:
        return ZERO_N
    return pound(x.valuation())
