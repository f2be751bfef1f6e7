"""Randomized checks of the algebraic laws, and a sampling containment oracle.

Every trial draws its own ``random.Random`` seeded with
``f"{seed}:{suite}:{trial}"``, so results do not depend on the order in which
trials run and a failing trial can be replayed alone.

>>> run_suite("subdistributivity", GenConfig(trials=20)).failures
0
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable

from . import _linalg
from .determinant import det, is_reduced, laplace, reduced_bounds
from .errors import ExtNumError, UnknownSuite
from .external import (
    ExternalNumber,
    check_identity,
    correction_identity,
    distributivity_holds,
    eadd,
    ediv,
    emul,
    eneg,
    esub,
    is_nonnegative,
    rel_uncertainty,
    subset,
)
from .inverse import near_inverse, verify_inverse
from .matrix import (
    FlexMatrix,
    assoc_check,
    distrib_matrix_left,
    distrib_matrix_right,
    distrib_scalar_left,
    distrib_scalar_right,
    madd,
    mmul,
    mneg,
    msubset,
    smul,
    transpose,
)
from .neutrix import LINE, OSLASH, POUND, ZERO_N, Base, Neutrix, nsum
from .nsreal import NSReal, ZERO
from .rank import combine, dependence, minor_rank, rank_report
from .sampling import SampleOracle

__all__ = [
    "GenConfig",
    "Generator",
    "SampleOracle",
    "SuiteReport",
    "SUITES",
    "run_suite",
    "Var",
    "Op",
    "Det",
    "evaluate",
    "OracleReport",
    "containment_oracle",
    "random_expression",
    "run_containment",
]


@dataclass(frozen=True)
class GenConfig:
    """Bounds for random instances; equal configs give equal instance streams."""

    seed: int = 0
    trials: int = 500
    exp_min: Fraction = Fraction(-1)
    exp_max: Fraction = Fraction(2)
    exp_step: Fraction = Fraction(1, 2)
    coeff_bound: int = 4
    weights: tuple[float, float, float, float] = (0.35, 0.3, 0.3, 0.05)
    max_dim: int = 3

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.exp_min > self.exp_max or self.exp_step <= 0:
            raise ValueError("bad exponent range")
        if self.coeff_bound < 1 or self.max_dim < 1:
            raise ValueError("bounds must be positive")
        if len(self.weights) != 4 or min(self.weights) < 0 or sum(self.weights) <= 0:
            raise ValueError("neutrix weights must be four non-negative numbers")


class Generator:
    """Random exact reals, neutrices, external numbers and matrices."""

    def __init__(self, config: GenConfig, rng: random.Random):
        self.config = config
        self.rng = rng

    def exponent(self) -> Fraction:
        c = self.config
        steps = int((c.exp_max - c.exp_min) / c.exp_step)
        return c.exp_min + self.rng.randint(0, steps) * c.exp_step

    def coeff(self) -> Fraction:
        b = self.config.coeff_bound
        return Fraction(self.rng.choice((-1, 1)) * self.rng.randint(1, b), self.rng.randint(1, 3))

    def real(self, zero_weight: float = 0.15) -> NSReal:
        if self.rng.random() < zero_weight:
            return ZERO
        x = NSReal.monomial(self.coeff(), self.exponent())
        if self.rng.random() < 0.3:
            x = x + NSReal.monomial(self.coeff(), self.exponent())
        return x

    def neutrix(self) -> Neutrix:
        kind = self.rng.choices(("zero", "o", "L", "line"), weights=self.config.weights)[0]
        if kind == "zero":
            return ZERO_N
        if kind == "line":
            return LINE
        return Neutrix.mono(self.exponent(), Base.OSLASH if kind == "o" else Base.POUND)

    def external(self) -> ExternalNumber:
        return ExternalNumber(self.real(), self.neutrix())

    def zeroless(self) -> ExternalNumber:
        while True:
            x = ExternalNumber(self.real(0.0), self.neutrix())
            if x.zeroless:
                return x

    def nonnegative(self) -> ExternalNumber:
        x = self.external()
        return eneg(x) if x.rep.sign() < 0 else x

    def nearly_opposite_to(self, x: ExternalNumber) -> ExternalNumber:
        """A number whose representative nearly cancels that of ``x``."""
        small = NSReal.monomial(self.coeff(), self.exponent() + 1)
        return ExternalNumber(-x.rep * (1 + NSReal.monomial(1, 1)) + small * x.rep, self.neutrix())

    def dim(self, low: int = 1, high: int | None = None) -> int:
        return self.rng.randint(low, high or self.config.max_dim)

    def matrix(self, m: int, n: int, entry: Callable | None = None) -> FlexMatrix:
        entry = entry or self.external
        return FlexMatrix([[entry() for _ in range(n)] for _ in range(m)])

    def real_matrix(self, m: int, n: int) -> FlexMatrix:
        return FlexMatrix([[ExternalNumber(self.real()) for _ in range(n)] for _ in range(m)])

    def neutrix_matrix(self, m: int, n: int) -> FlexMatrix:
        return FlexMatrix([[ExternalNumber(0, self.neutrix()) for _ in range(n)] for _ in range(m)])

    def small_neutrix(self) -> Neutrix:
        """A neutrix inside ``o``."""
        r = self.rng.random()
        if r < 0.3:
            return ZERO_N
        q = self.rng.choice((Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)))
        if q == 0 or r < 0.65:
            return Neutrix.mono(q, Base.OSLASH)
        return Neutrix.mono(q, Base.POUND)

    def reduced_matrix(self, n: int) -> FlexMatrix:
        """Entries bounded by ``1`` up to infinitesimals, largest entry ``±1 + A``."""
        while True:
            rows = []
            for _ in range(n):
                row = []
                for _ in range(n):
                    e = self.rng.choice((Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)))
                    d = self.rng.randint(2, 5)
                    c = Fraction(self.rng.randint(-(d - 1), d - 1), d) if e == 0 else self.coeff()
                    rep = NSReal.monomial(c, e)
                    if self.rng.random() < 0.3:
                        rep = rep + NSReal.monomial(self.coeff(), e + 1)
                    row.append(ExternalNumber(rep, self.small_neutrix()))
                rows.append(row)
            i, j = self.rng.randrange(n), self.rng.randrange(n)
            rows[i][j] = ExternalNumber(self.rng.choice((-1, 1)), self.small_neutrix())
            a = FlexMatrix(rows)
            if is_reduced(a):
                return a

    def invertible_matrix(self, n: int) -> FlexMatrix:
        """A non-singular exact matrix blurred by small neutrices, scaled by a power of eps."""
        while True:
            p = [[NSReal(self.rng.randint(-3, 3)) + NSReal.monomial(self.rng.randint(-2, 2), 1) for _ in range(n)] for _ in range(n)]
            if not _linalg.det(p).is_zero:
                break
        scale = NSReal.monomial(1, self.rng.choice((-1, 0, 0, 1)))
        return FlexMatrix([[ExternalNumber(x * scale, self.small_neutrix() * scale) for x in row] for row in p])


# suites ---------------------------------------------------------------------------------

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _mtext(*mats: FlexMatrix) -> str:
    return "; ".join(f"{name}={m}" for name, m in zip("ABCD", mats))


def _t_subdistributivity(g: Generator):
    x, y, z = g.external(), g.external(), g.external()

    def check():
        left = emul(eadd(x, y), z)
        right = eadd(emul(x, z), emul(y, z))
        return _status(subset(left, right) and check_identity(x, y, z).relation.left_in_right)

    return f"a={x}; b={y}; c={z}", check


def _t_criterion(g: Generator):
    x = g.zeroless() if g.rng.random() < 0.7 else g.external()
    y = g.nearly_opposite_to(x) if g.rng.random() < 0.5 else g.external()
    z = g.external()

    def check():
        equal = emul(eadd(x, y), z) == eadd(emul(x, z), emul(y, z))
        return _status(equal == distributivity_holds(x, y, z))

    return f"a={x}; b={y}; c={z}", check


def _t_correction(g: Generator):
    x, y, z = g.external(), g.external(), g.external()

    def check():
        left, right = correction_identity(x, y, z)
        return _status(left == right)

    return f"a={x}; b={y}; c={z}", check


def _t_r_product(g: Generator):
    xs = [g.zeroless() if g.rng.random() < 0.8 else g.external() for _ in range(g.rng.randint(1, 5))]

    def check():
        prod = xs[0]
        for x in xs[1:]:
            prod = emul(prod, x)
        expected = ZERO_N
        for x in xs:
            expected = nsum(expected, rel_uncertainty(x))
        return _status(rel_uncertainty(prod) == expected)

    return "factors=" + ", ".join(str(x) for x in xs), check


def _t_semigroup(g: Generator):
    m, n, p = g.dim(), g.dim(), g.dim()
    a, b, c = g.matrix(m, n), g.matrix(m, n), g.matrix(m, n)
    o = g.neutrix_matrix(m, n)
    d = g.matrix(n, p)
    s, t = g.external(), g.external()

    def check():
        ok = madd(a, madd(b, c)) == madd(madd(a, b), c)
        ok &= madd(a, b) == madd(b, a)
        absorbs = all(x.neut <= y.neut for x, y in zip(o.entries(), a.entries()))
        ok &= (madd(a, o) == a) == absorbs
        ok &= madd(a, mneg(a)) == a.neutricial_part()
        ok &= smul(0, a) == FlexMatrix.zeros(m, n)
        ok &= smul(1, a) == a
        ok &= smul(s, smul(t, a)) == smul(emul(s, t), a)
        ok &= mmul(FlexMatrix.identity(m), a) == a == mmul(a, FlexMatrix.identity(n))
        ok &= transpose(mmul(a, d)) == mmul(transpose(d), transpose(a))
        return _status(ok)

    return _mtext(a, b, c, o) + f"; D={d}; s={s}; t={t}", check


def _pick_matrix(g: Generator, m: int, n: int) -> FlexMatrix:
    r = g.rng.random()
    if r < 0.2:
        return g.real_matrix(m, n)
    if r < 0.35:
        return g.matrix(m, n, g.nonnegative)
    return g.matrix(m, n)


def _t_matrix_inclusions(g: Generator):
    m, n, p, q = g.dim(), g.dim(), g.dim(), g.dim()
    a, b = _pick_matrix(g, m, n), _pick_matrix(g, m, n)
    c = _pick_matrix(g, n, p)
    d = _pick_matrix(g, p, q)
    e = _pick_matrix(g, p, m)
    s, t = g.external(), g.external()

    def check():
        ok = msubset(smul(s, madd(a, b)), madd(smul(s, a), smul(s, b)))
        ok &= msubset(smul(eadd(s, t), a), madd(smul(s, a), smul(t, a)))
        ok &= msubset(mmul(madd(a, b), c), madd(mmul(a, c), mmul(b, c)))
        ok &= msubset(mmul(e, madd(a, b)), madd(mmul(e, a), mmul(e, b)))
        ok &= distrib_scalar_left(s, a, b).relation.left_in_right
        ok &= distrib_scalar_right(s, t, a).relation.left_in_right
        ok &= distrib_matrix_left(e, a, b).relation.left_in_right
        ok &= distrib_matrix_right(a, b, c).relation.left_in_right
        assoc_check(a, c, d)
        return _status(ok)

    return _mtext(a, b, c, d) + f"; E={e}; s={s}; t={t}", check


def _t_laplace(g: Generator):
    n = g.dim(1, 4)
    a = g.matrix(n, n)
    col = g.rng.randrange(n)

    def check():
        return _status(laplace(a, col).relation.left_in_right)

    return f"A={a}; column={col}", check


def _t_reduced(g: Generator):
    a = g.reduced_matrix(g.dim(1, 4))

    def check():
        return _status(reduced_bounds(a).ok)

    return f"A={a}", check


def _t_det_properties(g: Generator):
    n = g.dim(1, 4)
    a = g.matrix(n, n)
    i, j, k = g.rng.randrange(n), g.rng.randrange(n), g.rng.randrange(n)

    def check():
        d = det(a)
        ok = det(transpose(a)) == d
        if i != j:
            rows = list(a.rows)
            rows[i], rows[j] = rows[j], rows[i]
            ok &= det(FlexMatrix(rows)) == eneg(d)
            dup = list(a.rows)
            dup[j] = dup[i]
            ok &= det(FlexMatrix(dup)).is_neutrix
        ok &= det(a.replace_row(k, neutral_row)).is_neutrix
        return _status(ok)

    neutral_row = [ExternalNumber(0, g.neutrix()) for _ in range(n)]
    return f"A={a}; swap={i},{j}; neutrix row {k}", check


def _t_nonnegative(g: Generator):
    m, n = g.dim(), g.dim()
    a, b, c = (g.matrix(m, n, g.nonnegative) for _ in range(3))
    sq = [g.matrix(n, n, g.nonnegative) for _ in range(3)]
    lam, mu = g.nonnegative(), g.nonnegative()

    def check():
        nonneg = lambda x: all(is_nonnegative(e) for e in x.entries())
        ok = nonneg(madd(a, b)) and nonneg(smul(lam, a))
        ok &= madd(a, madd(b, c)) == madd(madd(a, b), c)
        ok &= madd(a, FlexMatrix.zeros(m, n)) == a
        ok &= madd(a, b) == madd(b, a)
        ok &= smul(lam, smul(mu, a)) == smul(emul(lam, mu), a)
        ok &= smul(1, a) == a
        ok &= smul(lam, madd(a, b)) == madd(smul(lam, a), smul(lam, b))
        ok &= smul(eadd(lam, mu), a) == madd(smul(lam, a), smul(mu, a))
        p, q, r = sq
        ok &= mmul(p, madd(q, r)) == madd(mmul(p, q), mmul(p, r))
        ok &= mmul(madd(p, q), r) == madd(mmul(p, r), mmul(q, r))
        ok &= mmul(mmul(p, q), r) == mmul(p, mmul(q, r))
        return _status(ok)

    return _mtext(a, b, c) + f"; P,Q,R={sq[0]}, {sq[1]}, {sq[2]}; l={lam}; m={mu}", check


def _t_near_inverse(g: Generator):
    n = g.dim(1, 3)
    a = g.invertible_matrix(n) if g.rng.random() < 0.8 else g.matrix(n, n)

    def check():
        rep = near_inverse(a)
        if not all(rep.hypotheses.values()):
            return VACUOUS
        again = verify_inverse(a, rep.candidate, rep.tolerance)
        return _status(rep.ok and again.ok)

    return f"A={a}", check


def _rank_entry(g: Generator) -> ExternalNumber:
    return ExternalNumber(g.real(0.3), g.neutrix())


def _t_rank(g: Generator):
    m, n = g.dim(1, 3), g.dim(1, 3)
    rows = [[_rank_entry(g) for _ in range(n)] for _ in range(m)]
    if m > 1 and g.rng.random() < 0.5:
        s = g.coeff()
        rows[1] = [ExternalNumber(x.rep * s, g.neutrix()) for x in rows[0]]
    a = FlexMatrix(rows)

    def check():
        report = rank_report(a, samples=5)
        vecs = [a.row(i) for i in range(m)]
        verdict = dependence(vecs)
        ok = verdict.verify(vecs) if verdict.decided else True
        mr = report.minor_rank.value
        ok &= mr == minor_rank(transpose(a)).value and mr <= report.row_rank.hi
        return _status(ok) if report.row_rank.decided else VACUOUS

    return f"A={a}", check


SUITES: dict[str, Callable] = {
    "subdistributivity": _t_subdistributivity,
    "distributivity-criterion-iff": _t_criterion,
    "correction-identity": _t_correction,
    "r-product": _t_r_product,
    "semigroup": _t_semigroup,
    "matrix-inclusions": _t_matrix_inclusions,
    "laplace-inclusion": _t_laplace,
    "reduced-bounds": _t_reduced,
    "det-properties": _t_det_properties,
    "nonnegative-axioms": _t_nonnegative,
    "near-inverse": _t_near_inverse,
    "rank-consistency": _t_rank,
}


@dataclass
class SuiteReport:
    name: str
    trials: int
    passed: int = 0
    failures: int = 0
    vacuous: int = 0
    counterexample: str | None = None
    error: str | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "trials": self.trials,
                "passed": self.passed,
                "failures": self.failures,
                "vacuous": self.vacuous,
                "counterexample": self.counterexample,
                "error": self.error,
            },
            sort_keys=True,
        )


def run_suite(name: str, config: GenConfig | None = None) -> SuiteReport:
    """Run ``config.trials`` random trials of the named law.

    A trial whose hypotheses do not hold counts as vacuous; it is neither a
    pass nor a failure.
    """
    config = config or GenConfig()
    if name == "containment":
        return run_containment(config.trials, seed=config.seed)
    if name not in SUITES:
        raise UnknownSuite(name)
    build = SUITES[name]
    report = SuiteReport(name, config.trials)
    start = time.perf_counter()
    for trial in range(config.trials):
        g = Generator(config, random.Random(f"{config.seed}:{name}:{trial}"))
        instance, check = build(g)
        try:
            status = check()
            error = None
        except ExtNumError as exc:
            status, error = FAIL, f"{type(exc).__name__}: {exc}"
        if status == PASS:
            report.passed += 1
        elif status == VACUOUS:
            report.vacuous += 1
        else:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = f"trial {trial}: {instance}"
                report.error = error
    report.seconds = time.perf_counter() - start
    return report


# containment oracle -------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Op:
    op: str
    args: tuple

    def __str__(self):
        return "(" + f" {self.op} ".join(str(a) for a in self.args) + ")"


@dataclass(frozen=True)
class Det:
    rows: tuple

    def __str__(self):
        return "det[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


_EXT_OPS = {"+": eadd, "-": esub, "*": emul, "/": ediv}
_REAL_OPS = {"+": NSReal.__add__, "-": NSReal.__sub__, "*": NSReal.__mul__, "/": NSReal.__truediv__}


def _real_det(m: list[list[NSReal]]) -> NSReal:
    n = len(m)
    total = ZERO
    for perm in permutations(range(n)):
        prod = NSReal(1)
        for i, j in enumerate(perm):
            prod = prod * m[i][j]
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total = total - prod if inv % 2 else total + prod
    return total


def evaluate(expr, env: list, exact: bool = False):
    """Evaluate over external numbers, or over reals when ``exact`` is set."""
    if isinstance(expr, Var):
        return env[expr.index]
    if isinstance(expr, Det):
        vals = [[evaluate(x, env, exact) for x in row] for row in expr.rows]
        return _real_det(vals) if exact else det(FlexMatrix(vals))
    ops = _REAL_OPS if exact else _EXT_OPS
    out = evaluate(expr.args[0], env, exact)
    for arg in expr.args[1:]:
        out = ops[expr.op](out, evaluate(arg, env, exact))
    return out


@dataclass
class OracleReport:
    expression: str
    value: ExternalNumber
    samples: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def containment_oracle(expr, env: list[ExternalNumber], samples: int = 50, seed: int = 0) -> OracleReport:
    """Evaluate ``expr`` on sampled representatives and check membership.

    Each sample must lie in the external value of ``expr``; the check is one
    directional, the external value may be larger than the sampled set.
    """
    value = evaluate(expr, env)
    report = OracleReport(str(expr), value, samples)
    for k in range(samples):
        oracle = SampleOracle(random.Random(f"{seed}:{k}"))
        point = [oracle.sample(x) for x in env]
        got = evaluate(expr, point, exact=True)
        if not value.contains(got):
            report.violations.append((point, got))
    return report


def random_expression(g: Generator):
    """An arithmetic chain or a determinant of order at most 3, with its inputs."""
    env: list[ExternalNumber] = []

    def leaf(zeroless: bool = False):
        env.append(g.zeroless() if zeroless else g.external())
        return Var(len(env) - 1)

    if g.rng.random() < 0.4:
        n = g.dim(1, 3)
        return Det(tuple(tuple(leaf() for _ in range(n)) for _ in range(n))), env
    expr = leaf()
    for _ in range(g.rng.randint(1, 4)):
        op = g.rng.choice("+-*/")
        expr = Op(op, (expr, leaf(zeroless=op == "/")))
    return expr, env


def run_containment(count: int = 200, samples: int = 50, seed: int = 0) -> SuiteReport:
    report = SuiteReport("containment", count)
    start = time.perf_counter()
    config = GenConfig(seed=seed)
    for trial in range(count):
        g = Generator(config, random.Random(f"{seed}:containment:{trial}"))
        expr, env = random_expression(g)
        try:
            rep = containment_oracle(expr, env, samples, seed=trial)
            ok, error = rep.ok, None
        except ExtNumError as exc:
            ok, error = False, f"{type(exc).__name__}: {exc}"
        if ok:
            report.passed += 1
        else:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = f"trial {trial}: {expr} with " + ", ".join(str(x) for x in env)
                report.error = error
    report.seconds = time.perf_counter() - start
    return report
