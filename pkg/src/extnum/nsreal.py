"""Exact nonstandard reals: rational functions of a positive infinitesimal.

An :class:`NSReal` is a quotient of two generalized polynomials in a formal
symbol ``eps`` that is positive and smaller than every positive rational.
Exponents may be any rationals, so ``eps^(1/2)`` is available.  Ordering is
the ``eps -> 0+`` order: the sign of a value is the sign of its leading
(lowest-order) coefficient.

>>> x = 1 / (1 + EPS)
>>> x.valuation(), x.sign()
(Fraction(0, 1), 1)
>>> x * (1 + EPS) == 1
True
>>> compare(2 / EPS, NSReal(1000)).value
'gt'
>>> classify(EPS ** 2).value
'infinitesimal'
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational

from .errors import DomainError, ResourceError

__all__ = [
    "NSReal",
    "EPS",
    "ZERO",
    "ONE",
    "Order",
    "Magnitude",
    "classify",
    "compare",
    "valuation",
    "limits",
]

Terms = tuple  # tuple[tuple[Fraction, Fraction], ...] sorted by exponent


class _Limits:
    """Size guardrails for exact computations.

    ``max_terms`` bounds the stored terms of a numerator plus denominator,
    ``max_exp_denominator`` bounds the denominators of exponents and
    ``max_dense`` bounds the length of the dense polynomials used by gcd and
    series truncation.
    """

    def __init__(self):
        self.max_terms = 512
        self.max_exp_denominator = 720
        self.max_dense = 4096


limits = _Limits()


class Order(str, enum.Enum):
    LT = "lt"
    EQ = "eq"
    GT = "gt"


class Magnitude(str, enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    APPRECIABLE = "appreciable"
    UNLIMITED = "unlimited"


# --------------------------------------------------------------------------
# sparse generalized polynomials: sorted tuples of (exponent, coefficient)


def _from_dict(d: dict) -> Terms:
    return tuple(sorted((e, c) for e, c in d.items() if c))


def _padd(a: Terms, b: Terms) -> Terms:
    d = dict(a)
    for e, c in b:
        d[e] = d.get(e, 0) + c
    return _from_dict(d)


def _pmul(a: Terms, b: Terms) -> Terms:
    if len(a) == 1 and len(b) == 1:
        (e1, c1), (e2, c2) = a[0], b[0]
        return ((e1 + e2, c1 * c2),)
    d: dict = {}
    for e1, c1 in a:
        for e2, c2 in b:
            e = e1 + e2
            d[e] = d.get(e, 0) + c1 * c2
    return _from_dict(d)


def _pscale(a: Terms, c, e) -> Terms:
    return tuple((x + e, y * c) for x, y in a)


def _grid(*polys: Terms) -> int:
    g = 1
    for p in polys:
        for e, _ in p:
            g = g * e.denominator // math.gcd(g, e.denominator)
    return g


def _dense(p: Terms, base: Fraction, grid: int) -> list:
    top = int((p[-1][0] - base) * grid)
    if top + 1 > limits.max_dense:
        raise ResourceError(f"dense polynomial of length {top + 1} exceeds guardrail")
    out = [Fraction(0)] * (top + 1)
    for e, c in p:
        out[int((e - base) * grid)] = c
    return out


def _sparse(coeffs: list, base: Fraction, grid: int) -> Terms:
    return tuple((base + Fraction(i, grid), c) for i, c in enumerate(coeffs) if c)


def _dtrim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _ddivmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dl = len(den) - 1
    lead = den[-1]
    if len(num) <= dl:
        return [], _dtrim(num)
    quot = [Fraction(0)] * (len(num) - dl)
    for k in range(len(num) - 1, dl - 1, -1):
        c = num[k]
        if c:
            c = c / lead
            quot[k - dl] = c
            for j in range(dl + 1):
                num[k - dl + j] -= c * den[j]
    return quot, _dtrim(num[:dl])


def _dgcd(a: list, b: list) -> list:
    a, b = _dtrim(list(a)), _dtrim(list(b))
    while b:
        _, r = _ddivmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def _series_inverse(den: list, n: int) -> list:
    """First ``n`` coefficients of ``1/den`` where ``den[0] == 1``."""
    out = [Fraction(0)] * n
    if n == 0:
        return out
    out[0] = Fraction(1)
    for k in range(1, n):
        s = Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            if den[j]:
                s -= den[j] * out[k - j]
        out[k] = s
    return out


def _coerce_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


_ONE_TERMS = ((Fraction(0), Fraction(1)),)


class NSReal:
    """Immutable exact nonstandard real ``num(eps) / den(eps)``.

    The stored form is canonical: the denominator has lowest term
    ``1 * eps^0`` and shares no polynomial factor with the numerator, so two
    values are equal exactly when their stored terms are equal.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, NSReal):
            self._num, self._den = value._num, value._den
        else:
            c = _coerce_coeff(value)
            self._num = ((Fraction(0), c),) if c else ()
            self._den = _ONE_TERMS
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def _raw(cls, num: Terms, den: Terms) -> NSReal:
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff, exponent=0) -> NSReal:
        """Return ``coeff * eps^exponent``."""
        c = _coerce_coeff(coeff)
        if not c:
            return ZERO
        e = _coerce_coeff(exponent)
        if e.denominator > limits.max_exp_denominator:
            raise ResourceError("exponent denominator exceeds guardrail")
        return cls._raw(((e, c),), _ONE_TERMS)

    @classmethod
    def from_terms(cls, num, den=None) -> NSReal:
        """Build from ``{exponent: coefficient}`` mappings or pair sequences."""
        n = _from_dict(_collect(num))
        d = _from_dict(_collect(den)) if den is not None else _ONE_TERMS
        return _canon(n, d)

    # inspection ---------------------------------------------------------

    @property
    def numerator(self) -> Terms:
        return self._num

    @property
    def denominator(self) -> Terms:
        return self._den

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_polynomial(self) -> bool:
        return len(self._den) == 1

    def valuation(self):
        """Leading exponent; ``math.inf`` for zero."""
        return self._num[0][0] if self._num else math.inf

    def leading_coefficient(self) -> Fraction:
        return self._num[0][1] if self._num else Fraction(0)

    def sign(self) -> int:
        if not self._num:
            return 0
        return 1 if self._num[0][1] > 0 else -1

    def is_infinitesimal(self) -> bool:
        return not self._num or self._num[0][0] > 0

    def is_limited(self) -> bool:
        return not self._num or self._num[0][0] >= 0

    def is_standard(self) -> bool:
        """True for plain rationals."""
        return not self._num or (len(self._num) == 1 and self._num[0][0] == 0 and self.is_polynomial)

    def to_fraction(self) -> Fraction:
        if not self.is_standard():
            raise ValueError(f"{self} is not a standard rational")
        return self.leading_coefficient()

    def truncate(self, bound, inclusive: bool) -> NSReal:
        """Polynomial part of the series expansion below ``bound``.

        Terms with exponent ``< bound`` are kept, and also ``== bound`` when
        ``inclusive``.  The result is a generalized polynomial.
        """
        if not self._num:
            return self
        bound = Fraction(bound)

        def keep(e):
            return e < bound or (inclusive and e == bound)

        if self.is_polynomial:
            if keep(self._num[-1][0]):
                return self
            return NSReal._raw(tuple(t for t in self._num if keep(t[0])), _ONE_TERMS)
        v = self._num[0][0]
        if not keep(v):
            return ZERO
        grid = _grid(self._num, self._den, ((bound - v, 0),))
        n_needed = int((bound - v) * grid) + 1
        if n_needed > limits.max_dense:
            raise ResourceError("series truncation exceeds guardrail")
        num = _dense(self._num, v, grid)
        den = _dense(self._den, Fraction(0), grid)
        inv = _series_inverse(den, n_needed)
        out = {}
        for i, a in enumerate(num[:n_needed]):
            if a:
                for j in range(n_needed - i):
                    if inv[j]:
                        out[i + j] = out.get(i + j, 0) + a * inv[j]
        terms = tuple(
            (v + Fraction(k, grid), c) for k, c in sorted(out.items()) if c and keep(v + Fraction(k, grid))
        )
        return NSReal._raw(terms, _ONE_TERMS)

    def classify(self) -> Magnitude:
        return classify(self)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            if len(self._den) == 1:
                return _canon_poly(_padd(self._num, other._num))
            return _canon(_padd(self._num, other._num), self._den)
        num = _padd(_pmul(self._num, other._den), _pmul(other._num, self._den))
        return _canon(num, _pmul(self._den, other._den))

    __radd__ = __add__

    def __neg__(self):
        return NSReal._raw(tuple((e, -c) for e, c in self._num), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return ZERO
        num = _pmul(self._num, other._num)
        if len(self._den) == 1 and len(other._den) == 1:
            return _canon_poly(num)
        return _canon(num, _pmul(self._den, other._den))

    __rmul__ = __mul__

    def inverse(self) -> NSReal:
        if not self._num:
            raise DomainError("division by zero")
        return _canon(self._den, self._num)

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not other._num:
            raise DomainError("division by zero")
        if not self._num:
            return ZERO
        if len(other._num) == 1 and len(other._den) == 1:
            e, c = other._num[0]
            num = _pscale(self._num, 1 / c, -e)
            if len(self._den) == 1:
                return NSReal._raw(num, _ONE_TERMS)
            return _canon(num, self._den)
        return _canon(_pmul(self._num, other._den), _pmul(self._den, other._num))

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent):
        e = _coerce_coeff(exponent)
        if e.denominator == 1:
            k = e.numerator
            if k < 0:
                return (self ** -k).inverse()
            result, base = ONE, self
            while k:
                if k & 1:
                    result = result * base
                k >>= 1
                if k:
                    base = base * base
            return result
        if len(self._num) == 1 and self.is_polynomial:
            (x, c) = self._num[0]
            root = _rational_root(c, e)
            if root is not None:
                return NSReal.monomial(root, x * e)
        raise DomainError(f"rational power {e} of {self} is not representable")

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # order ----------------------------------------------------------------

    def _cmp(self, other) -> int:
        other = _lift(other)
        if other is NotImplemented:
            raise TypeError("unorderable")
        if self._den == other._den == _ONE_TERMS:
            return _canon_poly(_padd(self._num, tuple((e, -c) for e, c in other._num))).sign()
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, NSReal):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            return self == NSReal(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_standard():
                self._hash = hash(self.leading_coefficient())
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    def __reduce__(self):
        return (NSReal.from_terms, (self._num, self._den))

    # text -----------------------------------------------------------------

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NSReal('{self.to_text()}')"

    def to_text(self, unicode: bool = False) -> str:
        num = _render_terms(self._num, unicode)
        if self.is_polynomial:
            return num
        den = _render_terms(self._den, unicode)
        if len(self._num) == 1 and "/" not in num:
            return f"{num}/({den})"
        return f"({num})/({den})"


def _collect(terms) -> dict:
    if terms is None:
        return {}
    items = terms.items() if isinstance(terms, dict) else terms
    d: dict = {}
    for e, c in items:
        e, c = _coerce_coeff(e), _coerce_coeff(c)
        d[e] = d.get(e, 0) + c
    return d


def _lift(value):
    if isinstance(value, NSReal):
        return value
    if isinstance(value, (int, Rational)):
        return NSReal(value)
    return NotImplemented


def _check(num: Terms, den: Terms) -> None:
    if len(num) + len(den) > limits.max_terms:
        raise ResourceError(f"{len(num) + len(den)} terms exceed guardrail {limits.max_terms}")
    for e, _ in num:
        if e.denominator > limits.max_exp_denominator:
            raise ResourceError("exponent denominator exceeds guardrail")


def _canon_poly(num: Terms) -> NSReal:
    if not num:
        return ZERO
    _check(num, _ONE_TERMS)
    return NSReal._raw(num, _ONE_TERMS)


def _canon(num: Terms, den: Terms) -> NSReal:
    if not den:
        raise DomainError("division by zero")
    if not num:
        return ZERO
    e0, c0 = den[0]
    if e0 or c0 != 1:
        inv = 1 / c0
        num = _pscale(num, inv, -e0)
        den = _pscale(den, inv, -e0)
    if len(den) == 1:
        return _canon_poly(num)
    v = num[0][0]
    grid = _grid(_pscale(num, 1, -v), den)
    n_d = _dense(num, v, grid)
    d_d = _dense(den, Fraction(0), grid)
    g = _dgcd(n_d, d_d)
    if len(g) > 1:
        n_d, _ = _ddivmod(n_d, g)
        d_d, _ = _ddivmod(d_d, g)
        c = d_d[0]
        if c != 1:
            n_d = [x / c for x in n_d]
            d_d = [x / c for x in d_d]
        num = _sparse(n_d, v, grid)
        den = _sparse(d_d, Fraction(0), grid)
        if len(den) == 1:
            return _canon_poly(num)
    _check(num, den)
    return NSReal._raw(num, den)


def _rational_root(c: Fraction, e: Fraction):
    """``c ** e`` when it is rational, otherwise ``None``."""
    p, q = e.numerator, e.denominator
    if c < 0 and q % 2 == 0:
        return None
    sign = -1 if c < 0 else 1
    a = abs(c)
    roots = []
    for part in (a.numerator, a.denominator):
        r = round(part ** (1 / q))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**q == part:
                roots.append(cand)
                break
        else:
            return None
    base = Fraction(roots[0], roots[1]) * sign
    return base**p


def _render_exp(e: Fraction, unicode: bool) -> str:
    sym = "ε" if unicode else "eps"
    if e == 1:
        return sym
    if e.denominator == 1 and e > 0:
        return f"{sym}^{e.numerator}"
    return f"{sym}^({e})"


def _render_terms(terms: Terms, unicode: bool = False) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _render_exp(e, unicode)
        else:
            body = f"{a}*{_render_exp(e, unicode)}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


ZERO = NSReal._raw((), _ONE_TERMS)
ONE = NSReal(1)
EPS = NSReal.monomial(1, 1)


def valuation(x: NSReal):
    return x.valuation()


def classify(x: NSReal) -> Magnitude:
    if x.is_zero:
        return Magnitude.ZERO
    v = x.valuation()
    if v > 0:
        return Magnitude.INFINITESIMAL
    if v == 0:
        return Magnitude.APPRECIABLE
    return Magnitude.UNLIMITED


def compare(x: NSReal, y: NSReal) -> Order:
    s = _lift(x)._cmp(y)
    return Order.LT if s < 0 else Order.GT if s > 0 else Order.EQ
