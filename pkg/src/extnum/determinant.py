"""Determinants of matrices of external numbers.

The determinant is the signed permutation sum evaluated with set arithmetic.
Because products do not distribute over sums, rewriting it (by a cofactor
expansion, by splitting a row, by pulling out a scalar, by adding a multiple
of a row) can shrink or grow the result.  Each of those operations returns a
:class:`~extnum.relation.RelationReport` stating how the rewritten value
relates to the determinant, and raises
:class:`~extnum.errors.TheoremViolation` if a proven inclusion fails.

>>> from extnum.parse import parse_matrix
>>> A = parse_matrix("[[1+o,0,0],[0,1,1+eps],[0,1,1]]")
>>> str(det(A))
'o'
>>> rep = laplace(A, 0)
>>> str(rep.left), rep.relation.value
('-eps + eps*o', 'StrictSubset')
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ConditionUnmet, NotReduced, NotSquare, NotTriangular, NotZeroless, ShapeMismatch, SizeCap
from .external import (
    ExternalNumber,
    eadd,
    emul,
    eneg,
    lift,
    neutrix_times,
    rel_uncertainty,
    subset,
)
from .matrix import FlexMatrix, not_nearly_opposite
from .neutrix import LINE, OSLASH, POUND, ZERO_N, Neutrix, nmin, nsum
from .relation import Relation, RelationReport, enforce, relate

__all__ = [
    "DET_CAP",
    "MinorSelector",
    "det",
    "minor",
    "cofactor",
    "cofactor_matrix",
    "laplace",
    "det_row_sum",
    "det_row_scale",
    "add_multiple_row",
    "RowOpReport",
    "is_reduced",
    "reduced_bounds",
    "ReducedReport",
    "is_triangular",
    "triangular_det",
    "TriangularReport",
]

DET_CAP = 6
_EXACT_ZERO = ExternalNumber(0)


def _parity(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv & 1


def _require_square(a: FlexMatrix) -> int:
    if not a.is_square:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    return a.nrows


def det(a: FlexMatrix, cap: int = DET_CAP) -> ExternalNumber:
    """Signed permutation sum, permutations taken in lexicographic order."""
    n = _require_square(a)
    if n > cap:
        raise SizeCap(f"order {n} exceeds determinant cap {cap}")
    rows = a.rows
    total = None
    for perm in permutations(range(n)):
        prod = rows[0][perm[0]]
        for i in range(1, n):
            if prod == _EXACT_ZERO:
                break
            prod = emul(prod, rows[i][perm[i]])
        if _parity(perm):
            prod = eneg(prod)
        total = prod if total is None else eadd(total, prod)
    return total


@dataclass(frozen=True)
class MinorSelector:
    """Sorted row and column index sets of equal size."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("a minor needs equally many rows and columns, at least one")
        for idx in (self.rows, self.cols):
            if list(idx) != sorted(set(idx)):
                raise ValueError("minor indices must be strictly increasing")

    def check(self, a: FlexMatrix) -> None:
        if self.rows[-1] >= a.nrows or self.cols[-1] >= a.ncols or self.rows[0] < 0 or self.cols[0] < 0:
            raise IndexError("minor selector outside the matrix")

    @property
    def order(self) -> int:
        return len(self.rows)


def minor(a: FlexMatrix, sel: MinorSelector, cap: int = DET_CAP) -> ExternalNumber:
    sel.check(a)
    return det(a.submatrix(sel.rows, sel.cols), cap)


def cofactor(a: FlexMatrix, i: int, j: int) -> ExternalNumber:
    n = _require_square(a)
    if n == 1:
        return ExternalNumber(1)
    rows = [r for r in range(n) if r != i]
    cols = [c for c in range(n) if c != j]
    m = det(a.submatrix(rows, cols))
    return eneg(m) if (i + j) % 2 else m


def cofactor_matrix(a: FlexMatrix) -> FlexMatrix:
    n = _require_square(a)
    return FlexMatrix([[cofactor(a, i, j) for j in range(n)] for i in range(n)])


def _r_max(entries) -> Neutrix:
    out = ZERO_N
    for x in entries:
        out = nsum(out, rel_uncertainty(x))
    return out


def _r_min(entries) -> Neutrix:
    out = LINE
    for x in entries:
        out = nmin(out, rel_uncertainty(x))
    return out


def laplace(a: FlexMatrix, col: int) -> RelationReport:
    """Cofactor expansion along column ``col`` (left) against ``det`` (right)."""
    n = _require_square(a)
    if not 0 <= col < n:
        raise IndexError(f"column {col} outside 0..{n - 1}")
    total = None
    for i in range(n):
        term = emul(a[i, col], cofactor(a, i, col))
        total = term if total is None else eadd(total, term)
    d = det(a)
    rel = relate(total, d, subset)
    others = [a[i, j] for i in range(n) for j in range(n) if j != col]
    cond = _r_max(a.col(col)) <= _r_min(others)
    guaranteed = "equal" if cond else "subset"
    enforce(rel, guaranteed, "cofactor expansion")
    return RelationReport(total, d, rel, {"column uncertainty below the rest": cond}, guaranteed)


def _build_row_sum(b: FlexMatrix, c: FlexMatrix, k: int) -> FlexMatrix:
    if b.shape != c.shape:
        raise ShapeMismatch("matrices must have the same shape")
    _require_square(b)
    for i in range(b.nrows):
        if i != k and b.rows[i] != c.rows[i]:
            raise ShapeMismatch(f"matrices differ outside row {k}")
    return b.replace_row(k, [eadd(x, y) for x, y in zip(b.rows[k], c.rows[k])])


def det_row_sum(b: FlexMatrix, c: FlexMatrix, k: int) -> RelationReport:
    """``det(A)`` (left) against ``det(B) + det(C)`` where row ``k`` of ``A`` sums those of ``B`` and ``C``."""
    a = _build_row_sum(b, c, k)
    n = a.nrows
    left = det(a)
    right = eadd(det(b), det(c))
    rel = relate(left, right, subset)
    rest = [a[i, j] for i in range(n) for j in range(n) if i != k]
    conds = {
        "other rows' uncertainty below split row": _r_max(rest) <= nsum(_r_min(b.row(k)), _r_min(c.row(k))),
        "split row not nearly opposite": all(not_nearly_opposite(x, y) for x, y in zip(b.row(k), c.row(k))),
    }
    guaranteed = "equal" if any(conds.values()) else "subset"
    enforce(rel, guaranteed, "row-sum determinant")
    return RelationReport(left, right, rel, conds, guaranteed)


def det_row_scale(a: FlexMatrix, k: int, t) -> RelationReport:
    """``t * det(A)`` (left) against ``det`` of ``A`` with row ``k`` scaled by ``t``."""
    t = lift(t)
    n = _require_square(a)
    b = a.replace_row(k, [emul(t, x) for x in a.rows[k]])
    left = emul(t, det(a))
    right = det(b)
    rel = relate(left, right, subset)
    cond = rel_uncertainty(t) <= _r_min(a.entries())
    guaranteed = "equal" if cond else "subset"
    enforce(rel, guaranteed, "row-scaled determinant")
    return RelationReport(left, right, rel, {"scalar uncertainty below entries": cond}, guaranteed)


@dataclass(frozen=True)
class RowOpReport:
    """Result of adding ``t`` times row ``p`` to row ``k``."""

    matrix: FlexMatrix
    det_before: ExternalNumber
    det_after: ExternalNumber
    bound: ExternalNumber
    bound_relation: Relation
    conditions: dict
    unchanged_guaranteed: bool

    def lines(self) -> list[str]:
        out = [
            f"matrix: {self.matrix}",
            f"det before: {self.det_before}",
            f"det after: {self.det_after}",
            f"bound: {self.bound}",
            f"det after vs bound: {self.bound_relation.value}",
        ]
        out += [f"condition {k}: {'holds' if v else 'unmet'}" for k, v in self.conditions.items()]
        out.append(f"determinant unchanged: {'guaranteed' if self.unchanged_guaranteed else 'not guaranteed'}")
        return out


def add_multiple_row(a: FlexMatrix, p: int, k: int, t, strict: bool = True) -> RowOpReport:
    """Add ``t`` times row ``p`` to row ``k`` and bound the new determinant.

    The bound is ``det(A) + t * amax^(n-1) * Nmax`` where ``amax`` is the
    largest absolute entry and ``Nmax`` the largest entry neutrix.  With
    ``strict`` a failed precondition raises :class:`ConditionUnmet`;
    otherwise it is only reported.
    """
    t = lift(t)
    n = _require_square(a)
    if p == k:
        raise ValueError("source and target rows must differ")
    new = a.replace_row(k, [eadd(x, emul(t, y)) for x, y in zip(a.rows[k], a.rows[p])])
    amax = a.max_abs()
    conds = {
        "multiplier uncertainty below entries": rel_uncertainty(t) <= _r_min(a.entries()),
        "largest entry zeroless": amax.zeroless,
    }
    if strict and not all(conds.values()):
        raise ConditionUnmet(", ".join(k for k, v in conds.items() if not v))
    d0 = det(a)
    d1 = det(new)
    growth = neutrix_times(emul(t, amax ** (n - 1)), a.max_neutrix())
    bound = eadd(d0, lift(growth))
    rel = relate(d1, bound, subset)
    unchanged = all(conds.values()) and growth <= d0.neut
    if all(conds.values()):
        enforce(rel, "subset", "row-addition bound")
        if unchanged and d1 != d0:
            enforce(Relation.INCOMPARABLE, "equal", "row-addition invariance")
    return RowOpReport(new, d0, d1, bound, rel, conds, unchanged)


# reduced matrices -------------------------------------------------------------------

_ONE_O = ExternalNumber(1, OSLASH)


def is_reduced(a: FlexMatrix) -> bool:
    """The largest absolute entry is ``1 + N`` with ``N`` infinitesimal."""
    amax = a.max_abs()
    return amax.neut <= OSLASH and amax.contains(1)


@dataclass(frozen=True)
class ReducedReport:
    minors_checked: int
    minors_strictly_limited: bool
    minor_neutrices_bounded: bool
    large_cofactor_columns: tuple | None

    @property
    def ok(self) -> bool:
        return self.minors_strictly_limited and self.minor_neutrices_bounded and (
            self.large_cofactor_columns is None or all(self.large_cofactor_columns)
        )


def reduced_bounds(a: FlexMatrix) -> ReducedReport:
    """Check the size bounds on minors of a reduced square matrix.

    Every minor is a strict subset of the limited numbers, every minor's
    neutrix lies in the largest entry neutrix, and when the determinant is
    zeroless each column has a complementary minor not contained in
    ``o * det``.
    """
    n = _require_square(a)
    if not is_reduced(a):
        raise NotReduced(f"largest absolute entry {a.max_abs()} is not 1 plus an infinitesimal neutrix")
    nmax = a.max_neutrix()
    pound = lift(POUND)
    limited, bounded, count = True, True, 0
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                m = det(a.submatrix(rows, cols))
                count += 1
                if relate(m, pound, subset) is not Relation.STRICT_SUBSET:
                    limited = False
                if not m.neut <= nmax:
                    bounded = False
    d = det(a)
    columns = None
    if d.zeroless:
        small = lift(neutrix_times(d, OSLASH))
        columns = tuple(
            any(not subset(cofactor(a, i, j), small) for i in range(n)) for j in range(n)
        )
    report = ReducedReport(count, limited, bounded, columns)
    if not report.ok:
        enforce(Relation.INCOMPARABLE, "equal", f"reduced-matrix bounds {report}")
    return report


# triangular matrices -------------------------------------------------------------------


def is_triangular(a: FlexMatrix) -> str | None:
    """``"upper"``, ``"lower"`` or ``None``; neutrices play the role of zeros."""
    n = _require_square(a)
    if all(a[i, j].is_neutrix for i in range(n) for j in range(i)):
        return "upper"
    if all(a[i, j].is_neutrix for i in range(n) for j in range(i + 1, n)):
        return "lower"
    return None


@dataclass(frozen=True)
class TriangularReport:
    det: ExternalNumber
    diagonal_product: ExternalNumber
    bound: ExternalNumber
    relation: Relation
    equality_guaranteed: bool


def triangular_det(a: FlexMatrix) -> TriangularReport:
    """Determinant of a triangular matrix against its diagonal product."""
    n = _require_square(a)
    if is_triangular(a) is None:
        raise NotTriangular("entries on neither side of the diagonal are all neutrices")
    amax = a.max_abs()
    if not amax.zeroless:
        raise NotZeroless("the largest absolute entry must be zeroless")
    d = det(a)
    diag = a[0, 0]
    for i in range(1, n):
        diag = emul(diag, a[i, i])
    growth = neutrix_times(amax ** (n - 1), a.max_neutrix())
    bound = eadd(diag, lift(growth))
    rel = relate(d, bound, subset)
    enforce(rel, "subset", "triangular determinant bound")
    if is_reduced(a):
        enforce(relate(d, eadd(diag, lift(a.max_neutrix())), subset), "subset", "reduced triangular bound")
    equal = growth <= diag.neut
    if equal:
        enforce(relate(d, diag, subset), "equal", "triangular determinant")
    return TriangularReport(d, diag, bound, rel, equal)
