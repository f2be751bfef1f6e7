"""Matrices and vectors of external numbers.

Indices are zero-based throughout the library.  Besides the entrywise and
product operations, matrices expose the aggregates used by the bounds in
:mod:`extnum.determinant`: the largest and smallest neutrix among the entries
and the largest and smallest absolute value under the external order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ShapeMismatch
from .external import (
    ExternalNumber,
    eadd,
    eleq,
    emul,
    eneg,
    is_nonnegative,
    lift,
    nearly_opposite,
    rel_uncertainty,
    subset,
)
from .neutrix import LINE, ZERO_N, Neutrix, nmin, nsum, scalar_mul
from .nsreal import NSReal
from .relation import RelationReport, enforce, relate

__all__ = [
    "FlexMatrix",
    "FlexVector",
    "near_unit_vector",
    "madd",
    "mneg",
    "msub",
    "smul",
    "mmul",
    "transpose",
    "neutricial_part",
    "msubset",
    "relate_matrices",
    "not_nearly_opposite",
    "neutrix_over",
    "distrib_scalar_left",
    "distrib_scalar_right",
    "distrib_matrix_left",
    "distrib_matrix_right",
    "assoc_check",
]


def _max_abs(entries: Iterable[ExternalNumber]) -> ExternalNumber:
    best = None
    for x in entries:
        a = abs(x)
        if best is None or eleq(best, a):
            best = a
    return best


def _min_abs(entries: Iterable[ExternalNumber]) -> ExternalNumber:
    best = None
    for x in entries:
        a = abs(x)
        if best is None or eleq(a, best):
            best = a
    return best


def _max_neutrix(entries: Iterable[ExternalNumber]) -> Neutrix:
    out = ZERO_N
    for x in entries:
        out = nsum(out, x.neut)
    return out


def _min_neutrix(entries: Iterable[ExternalNumber]) -> Neutrix:
    out = LINE
    for x in entries:
        out = nmin(out, x.neut)
    return out


class FlexVector:
    """Immutable finite sequence of external numbers."""

    __slots__ = ("_items",)

    def __init__(self, items: Iterable):
        items = tuple(lift(x) for x in items)
        if not items:
            raise ShapeMismatch("a vector needs at least one entry")
        self._items = items

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def __getitem__(self, k):
        return self._items[k]

    def __eq__(self, other):
        if not isinstance(other, FlexVector):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __add__(self, other: FlexVector) -> FlexVector:
        if len(self) != len(other):
            raise ShapeMismatch("vector lengths differ")
        return FlexVector(eadd(x, y) for x, y in zip(self, other))

    def scale(self, t) -> FlexVector:
        t = lift(t)
        return FlexVector(emul(t, x) for x in self)

    def neutrices(self) -> tuple[Neutrix, ...]:
        return tuple(x.neut for x in self)

    def representatives(self) -> tuple[NSReal, ...]:
        return tuple(x.rep for x in self)

    def is_neutrix_vector(self) -> bool:
        return all(x.is_neutrix for x in self)

    def max_abs(self) -> ExternalNumber:
        return _max_abs(self)

    def is_upper_neutrix_vector(self) -> bool:
        return self.max_abs().is_neutrix

    def contains(self, values: Sequence) -> bool:
        return len(values) == len(self) and all(x.contains(v) for x, v in zip(self, values))

    def to_text(self, unicode: bool = False) -> str:
        return "(" + ", ".join(x.to_text(unicode) for x in self) + ")"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FlexVector('{self.to_text()}')"


def near_unit_vector(k: int, neutrices: Sequence[Neutrix]) -> FlexVector:
    """The vector of ``neutrices`` with ``1`` added at position ``k``."""
    if not 0 <= k < len(neutrices):
        raise IndexError(f"position {k} outside 0..{len(neutrices) - 1}")
    return FlexVector(ExternalNumber(1 if i == k else 0, n) for i, n in enumerate(neutrices))


class FlexMatrix:
    """Immutable rectangular matrix of external numbers."""

    __slots__ = ("_rows", "_cache")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(lift(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ShapeMismatch("a matrix needs at least one row and one column")
        n = len(data[0])
        if any(len(r) != n for r in data):
            raise ShapeMismatch("rows have different lengths")
        self._rows = data
        self._cache = {}

    @classmethod
    def identity(cls, n: int) -> FlexMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> FlexMatrix:
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_vectors(cls, vectors: Iterable[FlexVector]) -> FlexMatrix:
        return cls([list(v) for v in vectors])

    # shape and access ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij) -> ExternalNumber:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> FlexVector:
        return FlexVector(self._rows[i])

    def col(self, j: int) -> FlexVector:
        return FlexVector(r[j] for r in self._rows)

    def entries(self):
        for r in self._rows:
            yield from r

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> FlexMatrix:
        return FlexMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def replace_row(self, k: int, row: Iterable) -> FlexMatrix:
        new = [list(r) for r in self._rows]
        row = list(row)
        if len(row) != self.ncols:
            raise ShapeMismatch("replacement row has the wrong length")
        new[k] = row
        return FlexMatrix(new)

    def representatives(self) -> list[list[NSReal]]:
        return [[x.rep for x in r] for r in self._rows]

    def neutrices(self) -> list[list[Neutrix]]:
        return [[x.neut for x in r] for r in self._rows]

    @property
    def T(self) -> FlexMatrix:
        return transpose(self)

    # predicates and aggregates ------------------------------------------

    def _cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def is_real(self) -> bool:
        return all(x.is_real for x in self.entries())

    @property
    def is_neutricial(self) -> bool:
        return all(x.is_neutrix for x in self.entries())

    @property
    def is_zeroless(self) -> bool:
        return all(x.zeroless for x in self.entries())

    @property
    def is_nonnegative(self) -> bool:
        return all(is_nonnegative(x) for x in self.entries())

    def max_neutrix(self) -> Neutrix:
        return self._cached("maxN", lambda: _max_neutrix(self.entries()))

    def min_neutrix(self) -> Neutrix:
        return self._cached("minN", lambda: _min_neutrix(self.entries()))

    def max_abs(self) -> ExternalNumber:
        return self._cached("maxA", lambda: _max_abs(self.entries()))

    def min_abs(self) -> ExternalNumber:
        return self._cached("minA", lambda: _min_abs(self.entries()))

    def neutricial_part(self) -> FlexMatrix:
        return neutricial_part(self)

    # operators ------------------------------------------------------------

    def __add__(self, other):
        return madd(self, other)

    def __sub__(self, other):
        return msub(self, other)

    def __neg__(self):
        return mneg(self)

    def __mul__(self, other):
        if isinstance(other, FlexMatrix):
            return mmul(self, other)
        return smul(other, self)

    def __rmul__(self, other):
        return smul(other, self)

    def __matmul__(self, other):
        return mmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, FlexMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def to_text(self, unicode: bool = False) -> str:
        return "[" + ",".join("[" + ", ".join(x.to_text(unicode) for x in r) + "]" for r in self._rows) + "]"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FlexMatrix('{self.to_text()}')"


# elementary operations -----------------------------------------------------------


def _same_shape(a: FlexMatrix, b: FlexMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")


def madd(a: FlexMatrix, b: FlexMatrix) -> FlexMatrix:
    _same_shape(a, b)
    return FlexMatrix([[eadd(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def mneg(a: FlexMatrix) -> FlexMatrix:
    return FlexMatrix([[eneg(x) for x in r] for r in a.rows])


def msub(a: FlexMatrix, b: FlexMatrix) -> FlexMatrix:
    return madd(a, mneg(b))


def smul(t, a: FlexMatrix) -> FlexMatrix:
    t = lift(t)
    return FlexMatrix([[emul(t, x) for x in r] for r in a.rows])


def mmul(a: FlexMatrix, b: FlexMatrix) -> FlexMatrix:
    """Matrix product with inner sums accumulated left to right."""
    if a.ncols != b.nrows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for ra in a.rows:
        row = []
        for j in range(b.ncols):
            acc = emul(ra[0], b.rows[0][j])
            for k in range(1, a.ncols):
                acc = eadd(acc, emul(ra[k], b.rows[k][j]))
            row.append(acc)
        out.append(row)
    return FlexMatrix(out)


def transpose(a: FlexMatrix) -> FlexMatrix:
    return FlexMatrix(zip(*a.rows))


def neutricial_part(a: FlexMatrix) -> FlexMatrix:
    return FlexMatrix([[ExternalNumber(0, x.neut) for x in r] for r in a.rows])


def msubset(a: FlexMatrix, b: FlexMatrix) -> bool:
    """Entrywise inclusion."""
    _same_shape(a, b)
    return all(subset(x, y) for x, y in zip(a.entries(), b.entries()))


def relate_matrices(a: FlexMatrix, b: FlexMatrix):
    return relate(a, b, msubset)


# distributivity and associativity ------------------------------------------------


def not_nearly_opposite(x: ExternalNumber, y: ExternalNumber) -> bool:
    """Pairs with a neutricial member are never nearly opposite."""
    if not (x.zeroless and y.zeroless):
        return True
    return not nearly_opposite(x, y)


def neutrix_over(n: Neutrix, x: ExternalNumber) -> Neutrix:
    """``n / x`` for zeroless ``x``, which equals ``n / rep(x)``."""
    if not x.zeroless:
        return LINE
    return scalar_mul(1 / x.rep, n)


def _max_r(entries) -> Neutrix:
    out = ZERO_N
    for x in entries:
        out = nsum(out, rel_uncertainty(x))
    return out


def _min_pair_r(a: FlexMatrix, b: FlexMatrix) -> Neutrix:
    out = LINE
    for x, y in zip(a.entries(), b.entries()):
        out = nmin(out, nsum(rel_uncertainty(x), rel_uncertainty(y)))
    return out


def _ratio_min_over_max(a: FlexMatrix) -> Neutrix:
    return neutrix_over(a.min_neutrix(), a.max_abs())


def _ratio_max_over_min(a: FlexMatrix) -> Neutrix:
    return neutrix_over(a.max_neutrix(), a.min_abs())


def _finish(left, right, conditions: dict, what: str) -> RelationReport:
    rel = relate_matrices(left, right)
    guaranteed = "equal" if any(conditions.values()) else "subset"
    enforce(rel, guaranteed, what)
    return RelationReport(left, right, rel, conditions, guaranteed)


def distrib_scalar_left(t: ExternalNumber, a: FlexMatrix, b: FlexMatrix) -> RelationReport:
    """``t(A+B)`` against ``tA + tB``."""
    t = lift(t)
    _same_shape(a, b)
    left = smul(t, madd(a, b))
    right = madd(smul(t, a), smul(t, b))
    r = rel_uncertainty(t)
    conds = {
        "scalar uncertainty below entry uncertainties": r <= _min_pair_r(a, b),
        "matrices not nearly opposite": all(not_nearly_opposite(x, y) for x, y in zip(a.entries(), b.entries())),
    }
    if a.is_zeroless and b.is_zeroless:
        conds["zeroless ratio bound"] = r <= nsum(_ratio_min_over_max(a), _ratio_min_over_max(b))
    return _finish(left, right, conds, "scalar left distributivity")


def distrib_scalar_right(s: ExternalNumber, t: ExternalNumber, a: FlexMatrix) -> RelationReport:
    """``(s+t)A`` against ``sA + tA``."""
    s, t = lift(s), lift(t)
    left = smul(eadd(s, t), a)
    right = madd(smul(s, a), smul(t, a))
    bound = nsum(rel_uncertainty(s), rel_uncertainty(t))
    conds = {
        "entry uncertainties below scalar uncertainties": _max_r(a.entries()) <= bound,
        "scalars not nearly opposite": not_nearly_opposite(s, t),
    }
    if a.is_zeroless:
        conds["zeroless ratio bound"] = _ratio_max_over_min(a) <= bound
    return _finish(left, right, conds, "scalar right distributivity")


def distrib_matrix_left(a: FlexMatrix, b: FlexMatrix, c: FlexMatrix) -> RelationReport:
    """``A(B+C)`` against ``AB + AC``."""
    _same_shape(b, c)
    left = mmul(a, madd(b, c))
    right = madd(mmul(a, b), mmul(a, c))
    conds = {
        "left uncertainties below right uncertainties": _max_r(a.entries()) <= _min_pair_r(b, c),
        "summands not nearly opposite": all(not_nearly_opposite(x, y) for x, y in zip(b.entries(), c.entries())),
    }
    if a.is_zeroless and b.is_zeroless and c.is_zeroless:
        conds["zeroless ratio bound"] = _ratio_max_over_min(a) <= nsum(
            _ratio_min_over_max(b), _ratio_min_over_max(c)
        )
    return _finish(left, right, conds, "matrix left distributivity")


def distrib_matrix_right(a: FlexMatrix, b: FlexMatrix, c: FlexMatrix) -> RelationReport:
    """``(A+B)C`` against ``AC + BC``; only the inclusion is promised."""
    _same_shape(a, b)
    left = mmul(madd(a, b), c)
    right = madd(mmul(a, c), mmul(b, c))
    rel = relate_matrices(left, right)
    enforce(rel, "subset", "matrix right subdistributivity")
    return RelationReport(left, right, rel, {}, "subset")


def assoc_check(a: FlexMatrix, b: FlexMatrix, c: FlexMatrix) -> RelationReport:
    """Compare ``(AB)C`` (left) with ``A(BC)`` (right)."""
    left = mmul(mmul(a, b), c)
    right = mmul(a, mmul(b, c))
    rel = relate_matrices(left, right)
    conds = {
        "first factor real": a.is_real,
        "last factor real": c.is_real,
        "middle factor neutricial": b.is_neutricial,
        "last two non-negative": b.is_nonnegative and c.is_nonnegative,
        "first two non-negative": a.is_nonnegative and b.is_nonnegative,
    }
    left_in = conds["first factor real"] or conds["last two non-negative"]
    right_in = conds["last factor real"] or conds["first two non-negative"]
    equal = (
        conds["middle factor neutricial"]
        or (conds["first factor real"] and conds["last factor real"])
        or (a.is_nonnegative and b.is_nonnegative and c.is_nonnegative)
    )
    if equal or (left_in and right_in):
        guaranteed = "equal"
    elif left_in:
        guaranteed = "subset"
    elif right_in:
        guaranteed = "superset"
    else:
        guaranteed = None
    enforce(rel, guaranteed, "associativity")
    return RelationReport(left, right, rel, conds, guaranteed)
