"""External numbers: an exact representative plus a neutrix of uncertainty.

``ExternalNumber(a, A)`` is the set ``a + A``.  Values are kept in a canonical
form where every series term of ``a`` that lies inside ``A`` is dropped, so
two external numbers are equal as sets exactly when their stored parts are
equal.

>>> from extnum.neutrix import OSLASH, POUND
>>> one_o = ExternalNumber(1, OSLASH)
>>> str(one_o * one_o)
'1 + o'
>>> str(ExternalNumber(1) + ExternalNumber(-1, POUND * EPS))
'eps*L'
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotZeroless, TheoremViolation
from .neutrix import LINE, OSLASH, ZERO_N, Neutrix, nsum, nmul, scalar_mul
from .nsreal import EPS, NSReal
from .relation import Relation, RelationReport, enforce, relate

__all__ = [
    "ExternalNumber",
    "EPS",
    "lift",
    "eadd",
    "eneg",
    "esub",
    "emul",
    "einv",
    "ediv",
    "rel_uncertainty",
    "eleq",
    "subset",
    "intersects",
    "is_positive",
    "is_negative",
    "is_nonnegative",
    "is_nonpositive",
    "neutrix_times",
    "nearly_opposite",
    "opposite_wrt",
    "absorber",
    "exploder",
    "distributivity_holds",
    "check_identity",
    "correction_identity",
]


class ExternalNumber:
    __slots__ = ("rep", "neut", "_hash")

    def __init__(self, rep=0, neut: Neutrix = ZERO_N):
        rep = NSReal(rep)
        if not isinstance(neut, Neutrix):
            raise TypeError("neut must be a Neutrix")
        self.rep = neut.reduce(rep)
        self.neut = neut
        self._hash = None

    @classmethod
    def of(cls, value) -> ExternalNumber:
        return lift(value)

    @property
    def zeroless(self) -> bool:
        return not self.rep.is_zero

    @property
    def is_neutrix(self) -> bool:
        return self.rep.is_zero

    @property
    def is_real(self) -> bool:
        """True when the set is a single exact value."""
        return self.neut.is_zero

    def contains(self, x) -> bool:
        return self.neut.contains(NSReal(x) - self.rep)

    __contains__ = contains

    def __eq__(self, other):
        if isinstance(other, ExternalNumber):
            return self.neut == other.neut and self.rep == other.rep
        if isinstance(other, (NSReal, int, Fraction)):
            return self.neut.is_zero and self.rep == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rep, self.neut))
        return self._hash

    def __add__(self, other):
        return eadd(self, lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return esub(self, lift(other))

    def __rsub__(self, other):
        return esub(lift(other), self)

    def __neg__(self):
        return eneg(self)

    def __mul__(self, other):
        if isinstance(other, Neutrix):
            return neutrix_times(self, other)
        return emul(self, lift(other))

    def __rmul__(self, other):
        if isinstance(other, Neutrix):
            return neutrix_times(self, other)
        return emul(lift(other), self)

    def __truediv__(self, other):
        return ediv(self, lift(other))

    def __rtruediv__(self, other):
        return ediv(lift(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("external numbers only take integer powers")
        if k < 0:
            return einv(self ** -k)
        out = ExternalNumber(1)
        for _ in range(k):
            out = emul(out, self)
        return out

    def __abs__(self):
        return ExternalNumber(abs(self.rep), self.neut)

    def to_text(self, unicode: bool = False) -> str:
        if self.rep.is_zero:
            return self.neut.to_text(unicode) if not self.neut.is_zero else "0"
        r = self.rep.to_text(unicode)
        if self.neut.is_zero:
            return r
        return f"{r} + {self.neut.to_text(unicode)}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"ExternalNumber('{self.to_text()}')"


def lift(value) -> ExternalNumber:
    if isinstance(value, ExternalNumber):
        return value
    if isinstance(value, Neutrix):
        return ExternalNumber(0, value)
    return ExternalNumber(value)


# arithmetic ------------------------------------------------------------------


def eadd(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    return ExternalNumber(x.rep + y.rep, nsum(x.neut, y.neut))


def eneg(x: ExternalNumber) -> ExternalNumber:
    return ExternalNumber(-x.rep, x.neut)


def esub(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    return ExternalNumber(x.rep - y.rep, nsum(x.neut, y.neut))


def emul(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    n = nsum(nsum(scalar_mul(x.rep, y.neut), scalar_mul(y.rep, x.neut)), nmul(x.neut, y.neut))
    return ExternalNumber(x.rep * y.rep, n)


def einv(x: ExternalNumber) -> ExternalNumber:
    if not x.zeroless:
        raise NotZeroless(f"cannot invert {x}")
    inv = 1 / x.rep
    return ExternalNumber(inv, scalar_mul(inv * inv, x.neut))


def ediv(x: ExternalNumber, y: ExternalNumber) -> ExternalNumber:
    """Quotient ``a/b + (1/b^2) max(aB, bA)`` for zeroless ``y``."""
    if not y.zeroless:
        raise NotZeroless(f"cannot divide by {y}")
    b = y.rep
    inv2 = 1 / (b * b)
    n = scalar_mul(inv2, nsum(scalar_mul(x.rep, y.neut), scalar_mul(b, x.neut)))
    return ExternalNumber(x.rep / b, n)


def neutrix_times(x: ExternalNumber, n: Neutrix) -> Neutrix:
    """The set product ``x * n``, itself a neutrix."""
    return nsum(scalar_mul(x.rep, n), nmul(x.neut, n))


def rel_uncertainty(x: ExternalNumber) -> Neutrix:
    """Neutrix over representative for zeroless ``x``, the whole line otherwise."""
    if not x.zeroless:
        return LINE
    return scalar_mul(1 / x.rep, x.neut)


# set relations -------------------------------------------------------------------


def subset(x: ExternalNumber, y: ExternalNumber) -> bool:
    return x.neut <= y.neut and y.neut.contains(x.rep - y.rep)


def intersects(x: ExternalNumber, y: ExternalNumber) -> bool:
    return nsum(x.neut, y.neut).contains(x.rep - y.rep)


def eleq(x: ExternalNumber, y: ExternalNumber) -> bool:
    """Every member of ``x`` is below some member of ``y``."""
    d = y.rep - x.rep
    m = nsum(x.neut, y.neut)
    if m.contains(d):
        return x.neut <= y.neut
    return d.sign() > 0


def is_positive(x: ExternalNumber) -> bool:
    return x.zeroless and x.rep.sign() > 0


def is_negative(x: ExternalNumber) -> bool:
    return x.zeroless and x.rep.sign() < 0


def is_nonnegative(x: ExternalNumber) -> bool:
    """Some member is ``>= 0``."""
    return x.rep.sign() >= 0


def is_nonpositive(x: ExternalNumber) -> bool:
    """Some member is ``<= 0``."""
    return x.rep.sign() <= 0


_MINUS_ONE_O = ExternalNumber(-1, OSLASH)


def nearly_opposite(x: ExternalNumber, y: ExternalNumber) -> bool:
    if not (x.zeroless and y.zeroless):
        raise NotZeroless("nearly-opposite test needs zeroless operands")
    return subset(ediv(x, y), _MINUS_ONE_O)


def opposite_wrt(x: ExternalNumber, y: ExternalNumber, c: Neutrix) -> bool:
    """``(x+y)c`` is strictly inside ``max(xc, yc)``."""
    return neutrix_times(eadd(x, y), c) < nsum(neutrix_times(x, c), neutrix_times(y, c))


def absorber(x: ExternalNumber, n: Neutrix) -> bool:
    return neutrix_times(x, n) < n


def exploder(x: ExternalNumber, n: Neutrix) -> bool:
    return n < neutrix_times(x, n)


# distributivity ------------------------------------------------------------------


def distributivity_holds(x: ExternalNumber, y: ExternalNumber, z: ExternalNumber) -> bool:
    """Criterion for ``(x+y)z == xz + yz`` stated through relative uncertainties."""
    if rel_uncertainty(z) <= nsum(rel_uncertainty(x), rel_uncertainty(y)):
        return True
    return not opposite_wrt(x, y, z.neut)


def check_identity(x: ExternalNumber, y: ExternalNumber, z: ExternalNumber) -> RelationReport:
    """Compare ``(x+y)z`` with ``xz + yz``; the first is always included."""
    left = emul(eadd(x, y), z)
    right = eadd(emul(x, z), emul(y, z))
    rel = relate(left, right, subset)
    crit = distributivity_holds(x, y, z)
    enforce(rel, "equal" if crit else "subset", "subdistributivity")
    if not crit and rel is Relation.EQUAL:
        raise TheoremViolation("distributivity holds although the criterion fails")
    return RelationReport(left, right, rel, {"criterion": crit}, "equal" if crit else "subset")


def correction_identity(x: ExternalNumber, y: ExternalNumber, z: ExternalNumber) -> tuple:
    """Both sides of ``xz + yz = (x+y)z + Cx + Cy`` where ``C`` is ``N(z)``."""
    left = eadd(emul(x, z), emul(y, z))
    c = z.neut
    right = eadd(emul(eadd(x, y), z), lift(nsum(neutrix_times(x, c), neutrix_times(y, c))))
    return left, right
