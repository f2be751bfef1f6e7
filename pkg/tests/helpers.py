"""Strategies and independent oracles shared by the test modules.

The oracles here deliberately avoid the package's own canonicalization:
reals are checked by evaluating at exact rational points, neutrices by
membership of monomials on a fine exponent grid.
"""

from fractions import Fraction

from hypothesis import strategies as st

from extnum import LINE, ZERO_N, ExternalNumber, NSReal, oslash, pound

HALF = Fraction(1, 2)

coeffs = st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 4))
half_exps = st.integers(-4, 6).map(lambda k: Fraction(k, 2))


@st.composite
def polys(draw, max_terms=3, zero_ok=True):
    n = draw(st.integers(0 if zero_ok else 1, max_terms))
    x = NSReal(0)
    for _ in range(n):
        x = x + NSReal.monomial(draw(coeffs), draw(half_exps))
    if not zero_ok and x.is_zero:
        x = NSReal.monomial(draw(coeffs), draw(half_exps))
    return x


@st.composite
def nsreals(draw, zero_ok=True):
    """Polynomials, sometimes divided by ``1 + c eps^(k/2)``."""
    x = draw(polys(zero_ok=zero_ok))
    if draw(st.booleans()):
        x = x / (1 + NSReal.monomial(draw(coeffs), Fraction(draw(st.integers(1, 3)), 2)))
    return x


nonzero_nsreals = nsreals(zero_ok=False)

mono_neutrices = st.builds(
    lambda q, b: oslash(q) if b else pound(q), st.integers(-2, 4).map(lambda k: Fraction(k, 2)), st.booleans()
)
neutrices = st.one_of(st.just(ZERO_N), st.just(LINE), mono_neutrices, mono_neutrices)


@st.composite
def externals(draw, zeroless=False):
    n = draw(neutrices)
    x = ExternalNumber(draw(polys(max_terms=2, zero_ok=not zeroless)), n)
    if zeroless and not x.zeroless:
        x = ExternalNumber(NSReal.monomial(draw(coeffs), Fraction(-3)), n if not n.is_line else ZERO_N)
    return x


zeroless_externals = externals(zeroless=True)


# real-number oracle -----------------------------------------------------------------

POINTS = (Fraction(1, 1009), Fraction(2, 1013), Fraction(3, 1019))


def _terms_at(terms, s):
    """Value of ``sum c eps^e`` at ``eps = s^8``; exponents must be eighths."""
    total = Fraction(0)
    for e, c in terms:
        k = 8 * e
        assert k.denominator == 1, "oracle only handles exponents in eighths"
        total += c * s ** int(k)
    return total


def at(x: NSReal, s: Fraction) -> Fraction:
    return _terms_at(x.numerator, s) / _terms_at(x.denominator, s)


def same_function(x: NSReal, y: NSReal) -> bool:
    return all(at(x, s) == at(y, s) for s in POINTS)


def numeric_rank(rows) -> int:
    """Largest rank of the matrix evaluated at a few exact rational points."""
    best = 0
    for s in POINTS:
        a = [[at(x, s) for x in r] for r in rows]
        rank, cols = 0, len(a[0])
        for c in range(cols):
            piv = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            for i in range(len(a)):
                if i != rank and a[i][c] != 0:
                    f = a[i][c] / a[rank][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
            rank += 1
        best = max(best, rank)
    return best


# neutrix oracle ---------------------------------------------------------------------

GRID = [Fraction(k, 8) for k in range(-48, 49)]


def mono_in(n, e: Fraction) -> bool:
    """Is ``eps^e`` a member of ``n``?  Decided from the definition of each family."""
    if n.is_zero:
        return False
    if n.is_line:
        return True
    return e > n.q if n.base.name == "OSLASH" else e >= n.q


def members(n, window=(Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3))):
    """A finite set of members: zero and monomials just inside the threshold."""
    if n.is_zero:
        return [NSReal(0)]
    q = Fraction(0) if n.is_line else n.q
    out = [NSReal(0)]
    start = q - 2 if n.is_line else q
    if not n.is_line and n.base.name == "POUND":
        out += [NSReal.monomial(9, q), NSReal.monomial(-9, q)]
    for w in window:
        out += [NSReal.monomial(9, start + w), NSReal.monomial(-1, start + w)]
    return [m for m in out if m.is_zero or mono_in(n, m.valuation())]


def below_cut(n, x: NSReal) -> bool:
    """``x`` is at most some member of the neutrix ``n``."""
    return x.is_zero or x.sign() < 0 or (not x.is_zero and mono_in(n, x.valuation()))


def leq_oracle(a: ExternalNumber, b: ExternalNumber) -> bool:
    """Sampled check of: every member of ``a`` is at most some member of ``b``."""
    d = a.rep - b.rep
    cands = list(members(a.neut))
    if not d.is_zero and mono_in(a.neut, d.valuation()):
        cands.append(-2 * d)
    return all(below_cut(b.neut, d + m) for m in cands)


# matrices ---------------------------------------------------------------------------


@st.composite
def matrices(draw, m=None, n=None, entries=None, max_dim=3):
    from extnum import FlexMatrix

    m = m or draw(st.integers(1, max_dim))
    n = n or draw(st.integers(1, max_dim))
    entries = externals() if entries is None else entries
    return FlexMatrix([[draw(entries) for _ in range(n)] for _ in range(m)])


def square(max_dim=3, entries=None):
    return st.integers(1, max_dim).flatmap(lambda k: matrices(k, k, entries))


@st.composite
def nonnegative_externals(draw):
    x = draw(externals())
    return x if x.rep.sign() >= 0 else -x
