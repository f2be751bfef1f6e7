"""Linear dependence of external vectors and three notions of matrix rank.

Vectors ``xi_1..xi_m`` are dependent when some real coefficients, not all
zero, combine them into a vector of neutrices.  Deciding this in general is a
search over representatives, so :func:`dependence` returns one of three
verdicts and never guesses:

* :class:`Dependent` carries the coefficients and the resulting neutrix vector,
* :class:`Independent` carries a certificate that can be re-checked,
* :class:`Unknown` lists what was tried.

Two vectors are always decided exactly.  Larger sets are decided by zeroless
minors, cofactor enclosures of all representative determinants, kernels of
representative matrices, and dependent pairs.

>>> from extnum.parse import parse_vector
>>> v = dependence([parse_vector("[1+o, eps*o, -2+eps*L]"), parse_vector("[-2+o, eps*L, 4+eps*L]")])
>>> [str(t) for t in v.witness], str(v.residual)
(['2', '1'], '(o, eps*L, eps*L)')
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence, Union

from . import _linalg
from .determinant import MinorSelector, cofactor, det
from .errors import ShapeMismatch, SizeCap, TheoremViolation
from .external import ExternalNumber, ediv, eadd, emul, eneg, lift, subset
from .matrix import FlexMatrix, FlexVector, near_unit_vector
from .neutrix import LINE, ZERO_N, Base, Neutrix, oslash, pound, scalar_mul
from .nsreal import NSReal, ONE, ZERO
from .sampling import SampleOracle

__all__ = [
    "RANK_CAP",
    "CertificateKind",
    "Dependent",
    "Independent",
    "Unknown",
    "is_neutrix_vector",
    "near_unit_vector",
    "combine",
    "dependence",
    "pair_coefficient",
    "MinorRank",
    "minor_rank",
    "RowRank",
    "row_rank",
    "Defined",
    "UndefinedEvidence",
    "StrictUnknown",
    "strict_rank",
    "RankReport",
    "rank_report",
]

RANK_CAP = 6
PERTURBATION_PROBES = 20


class CertificateKind(str, enum.Enum):
    NONSINGULAR = "NonsingularCoordinateMatrix"
    TWO_BY_TWO = "TwoByTwoIff"
    EXHAUSTIVE = "ExhaustiveSmallCase"
    ENCLOSURE = "RepresentativeEnclosure"

    def __str__(self):
        return self.value


def is_neutrix_vector(v: FlexVector) -> bool:
    return v.is_neutrix_vector()


def combine(vectors: Sequence[FlexVector], coeffs: Sequence) -> FlexVector:
    """The external linear combination ``sum t_i * xi_i`` (zero terms skipped)."""
    total = None
    for t, v in zip(coeffs, vectors):
        t = NSReal(t)
        if t.is_zero:
            continue
        term = v.scale(t)
        total = term if total is None else total + term
    if total is None:
        return FlexVector([0] * len(vectors[0]))
    return total


# verdicts ------------------------------------------------------------------------


@dataclass(frozen=True)
class Dependent:
    """Coefficients ``witness`` with ``combine(vectors, witness) == residual``."""

    witness: tuple[NSReal, ...]
    residual: FlexVector
    via: str

    decided = True

    @property
    def name(self) -> str:
        return "Dependent"

    def verify(self, vectors: Sequence[FlexVector]) -> bool:
        if len(self.witness) != len(vectors) or all(t.is_zero for t in self.witness):
            return False
        res = combine(vectors, self.witness)
        return res == self.residual and res.is_neutrix_vector()

    def lines(self) -> list[str]:
        return [
            f"verdict: Dependent ({self.via})",
            "coefficients: (" + ", ".join(str(t) for t in self.witness) + ")",
            f"combination: {self.residual}",
        ]


@dataclass(frozen=True)
class Independent:
    """Independence with a certificate of the given kind.

    ``cols`` selects the columns of the coordinate submatrix used; for
    :attr:`CertificateKind.ENCLOSURE` the cofactor expansion is along row or
    column ``index`` of that submatrix.
    """

    kind: CertificateKind
    cols: tuple[int, ...] = ()
    axis: str | None = None
    index: int | None = None

    decided = True

    @property
    def name(self) -> str:
        return "Independent"

    def verify(self, vectors: Sequence[FlexVector]) -> bool:
        vecs = list(vectors)
        if any(v.is_neutrix_vector() for v in vecs):
            return False
        if self.kind is CertificateKind.EXHAUSTIVE:
            return len(vecs) == 2 and pair_coefficient(vecs[0], vecs[1]) is None
        sub = FlexMatrix([[v[c] for c in self.cols] for v in vecs])
        if not sub.is_square:
            return False
        if self.kind is CertificateKind.ENCLOSURE:
            return _expansion(sub, self.axis, self.index).zeroless
        if self.kind is CertificateKind.TWO_BY_TWO and sub.shape != (2, 2):
            return False
        return det(sub).zeroless

    def lines(self) -> list[str]:
        out = [f"verdict: Independent ({self.kind})"]
        if self.cols:
            out.append("columns: (" + ", ".join(str(c + 1) for c in self.cols) + ")")
        if self.axis is not None:
            out.append(f"expansion along {self.axis} {self.index}")
        return out


@dataclass(frozen=True)
class Unknown:
    diagnostics: tuple[str, ...] = ()

    decided = False

    @property
    def name(self) -> str:
        return "Unknown"

    def verify(self, vectors) -> bool:
        return False

    def lines(self) -> list[str]:
        return ["verdict: Unknown"] + [f"tried: {d}" for d in self.diagnostics]


Verdict = Union[Dependent, Independent, Unknown]


# the two-vector solver -------------------------------------------------------------


def _column_constraint(a: ExternalNumber, b: ExternalNumber):
    """The set of reals ``s`` with ``0`` in ``s*a + b``.

    Returned as ``("all",)``, ``("empty",)``, ``("convex", x)`` for an external
    number ``x``, or ``("far", N)`` for the complement of a neutrix ``N``.
    """
    if b.zeroless:
        if a.zeroless:
            return ("convex", eneg(ediv(b, a)))
        n = a.neut
        if n.is_zero:
            return ("empty",)
        if n.is_line:
            return ("far", ZERO_N)
        c = b.rep.valuation() - n.q
        return ("far", pound(c) if n.base is Base.OSLASH else oslash(c))
    if a.zeroless:
        return ("convex", lift(scalar_mul(1 / a.rep, b.neut)))
    return ("all",)


def _outside(big: Neutrix, small: Neutrix) -> NSReal | None:
    """A member of ``big`` that is not in ``small``."""
    if big <= small:
        return None
    if small.is_zero:
        if big.is_line:
            return ONE
        return NSReal.monomial(1, big.q + 1 if big.base is Base.OSLASH else big.q)
    if big.is_line:
        return NSReal.monomial(1, small.q - 1)
    if big.q == small.q:
        return NSReal.monomial(1, big.q)
    return NSReal.monomial(1, (big.q + small.q) / 2)


def pair_coefficient(x: FlexVector, y: FlexVector) -> NSReal | None:
    """Some ``s`` with ``s*x + y`` a neutrix vector, or ``None`` if none exists.

    Each column restricts ``s`` to an interval, to the complement of a
    neutrix, to everything or to nothing.  Intervals that pairwise meet have
    the one with the smallest neutrix as their intersection.
    """
    if len(x) != len(y):
        raise ShapeMismatch("vector lengths differ")
    convex: list[ExternalNumber] = []
    far: Neutrix | None = None
    for a, b in zip(x, y):
        kind, *arg = _column_constraint(a, b)
        if kind == "empty":
            return None
        if kind == "convex":
            convex.append(arg[0])
        elif kind == "far":
            far = arg[0] if far is None or arg[0] > far else far
    if convex:
        core = min(convex, key=lambda c: c.neut._key)
        if not all(subset(core, c) for c in convex):
            return None
    else:
        core = lift(LINE)
    if far is None or not far.contains(core.rep):
        return core.rep
    w = _outside(core.neut, far)
    return None if w is None else core.rep + w


def _pair_verdict(x: FlexVector, y: FlexVector) -> Dependent | None:
    s = pair_coefficient(x, y)
    if s is None:
        return None
    res = combine([x, y], [s, ONE])
    if not res.is_neutrix_vector():
        raise TheoremViolation(f"coefficient {s} does not make {x}, {y} neutricial")
    return Dependent((s, ONE), res, "exact two-vector solver")


# helpers for larger sets --------------------------------------------------------------


def _expansion(sub: FlexMatrix, axis: str, k: int) -> ExternalNumber:
    """Cofactor expansion of ``sub``; it contains every representative determinant."""
    n = sub.nrows
    total = ExternalNumber(0)
    for j in range(n):
        i, jj = (k, j) if axis == "row" else (j, k)
        x = sub[i, jj]
        if x == ExternalNumber(0):
            continue
        total = eadd(total, emul(x, cofactor(sub, i, jj)))
    return total


def _kernel_candidates(reps: list[list[NSReal]]):
    for t in _linalg.left_kernel(reps):
        yield tuple(t)


def _try_coeffs(vecs, t, via) -> Dependent | None:
    if all(NSReal(c).is_zero for c in t):
        return None
    res = combine(vecs, t)
    if res.is_neutrix_vector():
        return Dependent(tuple(NSReal(c) for c in t), res, via)
    return None


def _check_vectors(vectors, cap: int) -> list[FlexVector]:
    vecs = [v if isinstance(v, FlexVector) else FlexVector(v) for v in vectors]
    if not vecs:
        raise ShapeMismatch("need at least one vector")
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ShapeMismatch("vectors have different lengths")
    if len(vecs) > cap or n > cap:
        raise SizeCap(f"{len(vecs)} vectors of length {n} exceed the cap {cap}")
    return vecs


def _unit(m: int, i: int) -> tuple[NSReal, ...]:
    return tuple(ONE if k == i else ZERO for k in range(m))


def _extend(verdict: Dependent, positions: Sequence[int], m: int, vecs) -> Dependent:
    t = [ZERO] * m
    for p, c in zip(positions, verdict.witness):
        t[p] = c
    return Dependent(tuple(t), combine(vecs, t), verdict.via)


def dependence(vectors: Sequence[FlexVector], cap: int = RANK_CAP, seed: int = 0) -> Verdict:
    """Decide linear dependence of external vectors, with a certificate.

    ``seed`` fixes the probe representatives of the last search step.
    """
    vecs = _check_vectors(vectors, cap)
    m, n = len(vecs), len(vecs[0])
    centers = [list(v.representatives()) for v in vecs]

    if m > n:
        for t in _kernel_candidates(centers):
            found = _try_coeffs(vecs, t, "more vectors than coordinates")
            if found:
                return found
        raise TheoremViolation("representative kernel failed for more vectors than coordinates")

    for i, v in enumerate(vecs):
        if v.is_neutrix_vector():
            t = _unit(m, i)
            return Dependent(t, combine(vecs, t), "neutrix vector present")

    if m == n == 2:
        if det(FlexMatrix([list(v) for v in vecs])).zeroless:
            return Independent(CertificateKind.TWO_BY_TWO, (0, 1))
        found = _pair_verdict(vecs[0], vecs[1])
        if found is None:
            raise TheoremViolation("neutricial 2x2 determinant but no dependence coefficient")
        return found

    for cols in combinations(range(n), m):
        if det(FlexMatrix([[v[c] for c in cols] for v in vecs])).zeroless:
            return Independent(CertificateKind.NONSINGULAR, cols)

    for t in _kernel_candidates(centers):
        found = _try_coeffs(vecs, t, "kernel of center representatives")
        if found:
            return found

    if m == 2:
        found = _pair_verdict(vecs[0], vecs[1])
        return found if found else Independent(CertificateKind.EXHAUSTIVE)

    for cols in combinations(range(n), m):
        sub = FlexMatrix([[v[c] for c in cols] for v in vecs])
        for axis in ("col", "row"):
            for k in range(m):
                if _expansion(sub, axis, k).zeroless:
                    return Independent(CertificateKind.ENCLOSURE, cols, axis, k)

    for i, j in combinations(range(m), 2):
        found = _pair_verdict(vecs[i], vecs[j])
        if found:
            return _extend(found, (i, j), m, vecs)

    oracle = SampleOracle(random.Random(f"dependence:{seed}"))
    probes = [centers] + [[oracle.sample_vector(v) for v in vecs] for _ in range(PERTURBATION_PROBES)]
    for reps in probes:
        if _linalg.rank(reps) < m:
            for t in _kernel_candidates(reps):
                found = _try_coeffs(vecs, t, "kernel of probe representatives")
                if found:
                    return found
        for cols in combinations(range(n), m - 1):
            ker = _linalg.left_kernel([[r[c] for c in cols] for r in reps])
            if len(ker) == 1:
                found = _try_coeffs(vecs, ker[0], "kernel on a column subset")
                if found:
                    return found

    return Unknown(
        (
            "no zeroless maximal minor",
            "no zeroless cofactor enclosure",
            "no dependent pair",
            f"kernels of centers and {PERTURBATION_PROBES} probe representatives",
        )
    )


# minor rank ------------------------------------------------------------------------------


@dataclass(frozen=True)
class MinorRank:
    value: int
    witness: MinorSelector | None = None
    minor: ExternalNumber | None = None


def _check_matrix(a: FlexMatrix, cap: int) -> None:
    if a.nrows > cap or a.ncols > cap:
        raise SizeCap(f"matrix of shape {a.shape} exceeds the cap {cap}")


def minor_rank(a: FlexMatrix, cap: int = RANK_CAP) -> MinorRank:
    """Largest order of a zeroless minor, searched from the largest order down."""
    _check_matrix(a, cap)
    m, n = a.shape
    for k in range(min(m, n), 0, -1):
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                d = det(a.submatrix(rows, cols))
                if d.zeroless:
                    return MinorRank(k, MinorSelector(rows, cols), d)
    return MinorRank(0)


# row rank --------------------------------------------------------------------------------


@dataclass
class RowRank:
    """Interval ``[lo, hi]`` containing the row rank.

    ``lo`` is certified by an independent set of rows, ``hi`` by dependence
    verdicts on every set of ``hi + 1`` rows.  Undecided sets widen it.
    """

    lo: int
    hi: int
    independent_rows: tuple[int, ...] = ()
    independent_verdict: Independent | None = None
    dependent: dict = field(default_factory=dict)
    unknown: list = field(default_factory=list)

    @property
    def decided(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def _subset_verdicts(a: FlexMatrix, cap: int, seed: int):
    rows = [a.row(i) for i in range(a.nrows)]
    m = len(rows)
    cache: dict[tuple[int, ...], Verdict] = {}

    def verdict(sub: tuple[int, ...]) -> Verdict:
        if sub in cache:
            return cache[sub]
        vecs = [rows[i] for i in sub]
        for drop in range(len(sub)) if len(sub) > 1 else ():
            smaller = sub[:drop] + sub[drop + 1 :]
            v = cache.get(smaller)
            if isinstance(v, Dependent):
                pos = [sub.index(i) for i in smaller]
                out = _extend(v, pos, len(sub), vecs)
                out = Dependent(out.witness, out.residual, "contains a dependent subset")
                cache[sub] = out
                return out
        out = dependence(vecs, cap, seed)
        cache[sub] = out
        return out

    return m, verdict


def row_rank(a: FlexMatrix, cap: int = RANK_CAP, seed: int = 0) -> RowRank:
    _check_matrix(a, cap)
    m, verdict = _subset_verdicts(a, cap, seed)
    for k in range(1, m + 1):
        for sub in combinations(range(m), k):
            verdict(sub)
    lo, lo_rows, lo_cert = 0, (), None
    for k in range(m, 0, -1):
        for sub in combinations(range(m), k):
            v = verdict(sub)
            if isinstance(v, Independent):
                lo, lo_rows, lo_cert = k, sub, v
                break
        if lo:
            break
    hi = m
    dependent: dict = {}
    for k in range(0, m):
        subs = list(combinations(range(m), k + 1))
        if all(isinstance(verdict(s), Dependent) for s in subs):
            hi = k
            dependent = {s: verdict(s) for s in subs}
            break
    unknown = [s for k in range(1, m + 1) for s in combinations(range(m), k) if isinstance(verdict(s), Unknown)]
    if lo > hi:
        raise TheoremViolation(f"row rank bounds crossed: [{lo}, {hi}]")
    return RowRank(lo, hi, lo_rows, lo_cert, dependent, unknown)


# strict rank -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Defined:
    value: int
    representative: FlexMatrix
    via: str

    name = "Defined"

    def lines(self) -> list[str]:
        return [f"strict rank: Defined({self.value}) via {self.via}", f"representative matrix: {self.representative}"]


@dataclass(frozen=True)
class UndefinedEvidence:
    """``samples`` seeded representative matrices all had rank above the minor rank."""

    samples: int
    seed: int

    name = "UndefinedEvidence"

    def lines(self) -> list[str]:
        return [f"strict rank: UndefinedEvidence({self.samples}) seed {self.seed}"]


@dataclass(frozen=True)
class StrictUnknown:
    name = "Unknown"

    def lines(self) -> list[str]:
        return ["strict rank: Unknown (no search performed)"]


def _exact(reps: list[list[NSReal]]) -> FlexMatrix:
    return FlexMatrix([[ExternalNumber(x) for x in row] for row in reps])


def _in_span(basis: list[list[NSReal]], target: FlexVector, cols: Sequence[int]) -> list[NSReal] | None:
    """A combination of ``basis`` rows lying in ``target``, solved on ``cols``."""
    k = len(basis)
    if k == 1:
        s = pair_coefficient(FlexVector(basis[0]), FlexVector([eneg(x) for x in target]))
        return None if s is None else [s * b for b in basis[0]]
    sq = [[basis[i][c] for c in cols] for i in range(k)]
    if _linalg.det(sq).is_zero:
        return None
    inv = _linalg.inverse([list(r) for r in zip(*sq)])
    rhs = [target[c].rep for c in cols]
    coeffs = [sum((inv[i][j] * rhs[j] for j in range(k)), ZERO) for i in range(k)]
    row = [sum((coeffs[i] * basis[i][c] for i in range(k)), ZERO) for c in range(len(target))]
    return row if target.contains(row) else None


def _basis_construction(a: FlexMatrix, sel: MinorSelector) -> list[list[NSReal]] | None:
    """Keep center representatives of the rows of ``sel``; put every other row in their span."""
    centers = a.representatives()
    basis = [centers[i] for i in sel.rows]
    out = [None] * a.nrows
    for i in sel.rows:
        out[i] = centers[i]
    col_sets = [sel.cols] + [c for c in combinations(range(a.ncols), len(sel.rows)) if c != sel.cols]
    for i in range(a.nrows):
        if out[i] is not None:
            continue
        for cols in col_sets:
            row = _in_span(basis, a.row(i), cols)
            if row is not None:
                out[i] = row
                break
        else:
            return None
    return out


def _zeroless_minors(a: FlexMatrix, k: int):
    if k == 0:
        return
    for rows in combinations(range(a.nrows), k):
        for cols in combinations(range(a.ncols), k):
            if det(a.submatrix(rows, cols)).zeroless:
                yield MinorSelector(rows, cols)


def strict_rank(a: FlexMatrix, seed: int = 0, samples: int = 200, cap: int = RANK_CAP, mr: MinorRank | None = None):
    """Look for a representative matrix whose rank equals the minor rank.

    Tries the center representatives, then a construction that keeps the
    rows of a zeroless minor and places the others in their span, then
    ``samples`` random representative matrices (trial ``t`` seeded with
    ``f"{seed}:{t}"``).  Exhausting the search yields evidence, not a proof.
    """
    _check_matrix(a, cap)
    mr = mr or minor_rank(a, cap)
    centers = a.representatives()
    if _linalg.rank(centers) == mr.value:
        return Defined(mr.value, _exact(centers), "center representatives")
    tried = set()
    for sel in _zeroless_minors(a, mr.value):
        if sel.rows in tried:
            continue
        tried.add(sel.rows)
        built = _basis_construction(a, sel)
        if built is not None and _linalg.rank(built) == mr.value:
            return Defined(mr.value, _exact(built), "span of a zeroless minor's rows")
    if samples <= 0:
        return StrictUnknown()
    for trial in range(samples):
        reps = SampleOracle(random.Random(f"{seed}:{trial}")).sample_matrix(a)
        r = _linalg.rank(reps)
        if r == mr.value:
            return Defined(mr.value, _exact(reps), f"sample {trial}")
        if r < mr.value:
            raise TheoremViolation(f"representative of rank {r} below the minor rank {mr.value}")
    return UndefinedEvidence(samples, seed)


# report ------------------------------------------------------------------------------------


@dataclass
class RankReport:
    minor_rank: MinorRank
    row_rank: RowRank
    strict_rank: Defined | UndefinedEvidence | StrictUnknown
    transpose_minor_rank: int

    def lines(self) -> list[str]:
        mr = self.minor_rank
        out = [f"minor rank: {mr.value}"]
        if mr.witness is not None:
            rows = ", ".join(str(i + 1) for i in mr.witness.rows)
            cols = ", ".join(str(j + 1) for j in mr.witness.cols)
            out.append(f"zeroless minor: rows ({rows}) cols ({cols}) = {mr.minor}")
        rr = self.row_rank
        out.append(f"row rank: {rr}" + ("" if rr.decided else " (interval: some row sets undecided)"))
        if rr.independent_verdict is not None:
            rows = ", ".join(str(i + 1) for i in rr.independent_rows)
            out.append(f"independent rows ({rows}): {rr.independent_verdict.kind}")
        for sub, v in rr.dependent.items():
            rows = ", ".join(str(i + 1) for i in sub)
            coeffs = ", ".join(str(t) for t in v.witness)
            out.append(f"dependent rows ({rows}): coefficients ({coeffs}) give {v.residual}")
        out += self.strict_rank.lines()
        return out


def _tighten(a: FlexMatrix, rr: RowRank, sr: Defined) -> RowRank:
    """Certify row rank ``sr.value`` from the representative matrix of rank ``sr.value``."""
    r = sr.value
    reps = sr.representative.representatives()
    rows = [a.row(i) for i in range(a.nrows)]
    dependent = {}
    if r < a.nrows:
        for sub in combinations(range(a.nrows), r + 1):
            vecs = [rows[i] for i in sub]
            found = None
            for t in _linalg.left_kernel([reps[i] for i in sub]):
                found = _try_coeffs(vecs, t, "kernel of the strict-rank representative")
                if found:
                    break
            if found is None:
                raise TheoremViolation("rows of a rank-deficient representative are not dependent")
            dependent[sub] = found
    hi = min(rr.hi, r)
    return RowRank(rr.lo, hi, rr.independent_rows, rr.independent_verdict, dependent or rr.dependent, rr.unknown)


def rank_report(a: FlexMatrix, seed: int = 0, samples: int = 200, cap: int = RANK_CAP) -> RankReport:
    """Minor, row and strict rank with the relations between them checked."""
    _check_matrix(a, cap)
    mr = minor_rank(a, cap)
    mrt = minor_rank(a.T, cap).value
    if mr.value != mrt:
        raise TheoremViolation(f"minor rank {mr.value} differs from that of the transpose {mrt}")
    rr = row_rank(a, cap, seed)
    sr = strict_rank(a, seed, samples, cap, mr)
    if isinstance(sr, Defined):
        rr = _tighten(a, rr, sr)
        if not rr.lo == rr.hi == mr.value == sr.value:
            raise TheoremViolation(f"strict rank {sr.value} but minor rank {mr.value} and row rank {rr}")
    if mr.value > rr.hi:
        raise TheoremViolation(f"minor rank {mr.value} exceeds the row rank bound {rr.hi}")
    return RankReport(mr, rr, sr, mrt)
