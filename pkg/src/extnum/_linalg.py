"""Exact linear algebra over :class:`NSReal` matrices (lists of lists)."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

from .nsreal import NSReal, ZERO, ONE, _pmul


def _copy(m):
    return [[NSReal(x) for x in row] for row in m]


def _pivot_row(m, col, start):
    best, best_v = None, None
    for r in range(start, len(m)):
        x = m[r][col]
        if not x.is_zero:
            v = x.valuation()
            if best is None or v < best_v or (v == best_v and x.is_standard() and not m[best][col].is_standard()):
                best, best_v = r, v
    return best


def echelon(m):
    """Reduced row echelon form and the pivot columns."""
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = _pivot_row(a, c, r)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][c].is_zero:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    """Exact rank, computed from numeric ranks at enough sample points.

    Rows are scaled to polynomials in ``t = eps^(1/L)``.  A nonzero minor is
    then a polynomial of degree at most the sum ``D`` of the row degrees, so
    it cannot vanish at ``D + 1`` distinct points; the largest numeric rank
    over those points is the rank.
    """
    if not m or not m[0]:
        return 0
    rows, degree = _polynomial_rows(m)
    full = min(len(m), len(m[0]))
    best = 0
    for point in range(2, degree + 3):
        best = max(best, _numeric_rank([[_horner(p, point) for p in row] for row in rows]))
        if best == full:
            break
    return best


def _polynomial_rows(m):
    grid = 1
    for row in m:
        for x in row:
            for e, _ in x.numerator + x.denominator:
                grid = grid * e.denominator // math.gcd(grid, e.denominator)
    rows, total = [], 0
    for row in m:
        scaled = []
        for j, x in enumerate(row):
            terms = x.numerator
            for k, y in enumerate(row):
                if k != j and terms:
                    terms = _pmul(terms, y.denominator)
            scaled.append(terms)
        low = min((t[0][0] for t in scaled if t), default=Fraction(0))
        polys = [{int((e - low) * grid): c for e, c in t} for t in scaled]
        total += max((max(p) for p in polys if p), default=0)
        rows.append(polys)
    return rows, total


def _horner(p: dict, x: int) -> Fraction:
    return sum((c * x**k for k, c in p.items()), Fraction(0))


def _numeric_rank(a) -> int:
    a = [list(r) for r in a]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def _full_minor(m, r):
    """Rows and columns of a nonsingular ``r x r`` submatrix of a rank ``r`` matrix."""
    ncols = len(m[0])
    for cols in combinations(range(ncols), r):
        sub = [[row[c] for c in cols] for row in m]
        if rank(sub) < r:
            continue
        rows = []
        for i in range(len(m)):
            if rank([sub[k] for k in rows + [i]]) > len(rows):
                rows.append(i)
                if len(rows) == r:
                    return rows, list(cols)
    raise AssertionError("rank and minors disagree")


def left_kernel(m) -> list[list[NSReal]]:
    """Basis of ``{t : t^T m = 0}``, built from signed maximal minors.

    No division is performed, so polynomial input gives polynomial output.
    """
    nrows = len(m)
    r = rank(m)
    if r == 0:
        return [[ONE if k == i else ZERO for k in range(nrows)] for i in range(nrows)]
    rows, cols = _full_minor(m, r)
    basis = []
    for i in range(nrows):
        if i in rows:
            continue
        support = sorted(rows + [i])
        block = [[m[k][c] for c in cols] for k in support]
        t = [ZERO] * nrows
        for pos, k in enumerate(support):
            d = det(block[:pos] + block[pos + 1 :])
            t[k] = -d if pos % 2 else d
        if t[i].sign() < 0:
            t = [-x for x in t]
        basis.append(t)
    return basis


def nullspace(m) -> list[list[NSReal]]:
    """Basis of ``{x : m x = 0}``."""
    return left_kernel([list(col) for col in zip(*m)])


def det(m) -> NSReal:
    n = len(m)
    if n == 0:
        return ONE
    if n <= 4:
        total = ZERO
        for perm in permutations(range(n)):
            prod = ONE
            for i, j in enumerate(perm):
                prod = prod * m[i][j]
                if prod.is_zero:
                    break
            if not prod.is_zero:
                total = total + (prod if _parity(perm) == 0 else -prod)
        return total
    a = _copy(m)
    sign = 1
    result = ONE
    for c in range(n):
        p = _pivot_row(a, c, c)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        result = result * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            if not a[i][c].is_zero:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result if sign > 0 else -result


def inverse(m) -> list[list[NSReal]]:
    n = len(m)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    red, pivots = echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in zip(*b)] for row in a]


def _parity(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return inv & 1
