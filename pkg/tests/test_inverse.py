from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extnum import (
    OSLASH,
    POUND,
    ZERO_N,
    BadTolerance,
    FlexMatrix,
    HypothesisFailed,
    NearIdentity,
    NotSquare,
    inverse_symmetry,
    is_nonsingular,
    matrix_rel_uncertainty,
    near_inverse,
    oslash,
    parse_matrix,
    parse_scalar,
    pound,
    verify_inverse,
)
from extnum._linalg import inverse as real_inverse
from helpers import matrices

M, X = parse_matrix, parse_scalar
SARRUS = M("[[1+o, 0, 0],[0, 1, 1+eps],[0, 1, 1]]")
COUNTER = M("[[eps, o],[0, 1]]")


def exact_inverse(a: FlexMatrix) -> FlexMatrix:
    return FlexMatrix(real_inverse(a.representatives()))


def test_nonsingular_examples():
    assert is_nonsingular(COUNTER)
    assert not is_nonsingular(SARRUS)
    assert is_nonsingular(FlexMatrix.identity(3))
    with pytest.raises(NotSquare):
        is_nonsingular(M("[[1, 2]]"))


def test_relative_uncertainty_examples():
    assert matrix_rel_uncertainty(FlexMatrix.identity(2)) == X("1")
    assert matrix_rel_uncertainty(M("[[1+o, 0],[0, 1]]")) == X("1+o")
    assert matrix_rel_uncertainty(COUNTER) == X("eps")


def test_near_identity():
    assert NearIdentity(2, OSLASH).matrix() == M("[[1+o, o],[o, 1+o]]")
    with pytest.raises(BadTolerance):
        NearIdentity(2, POUND)


def test_real_inverse_exact():
    a = M("[[2, 1],[1/eps, 3]]")
    r = verify_inverse(a, exact_inverse(a), ZERO_N)
    assert r.ok


def test_counterexample_fails_for_every_tolerance():
    b = near_inverse(COUNTER).candidate
    assert b == M("[[1/eps, o/eps],[0, 1]]")
    quarters = [Fraction(k, 4) for k in range(1, 12)]
    tolerances = [ZERO_N, OSLASH] + [oslash(q) for q in quarters] + [pound(q) for q in quarters]
    for n in tolerances:
        r = verify_inverse(COUNTER, b, n)
        assert not r.ok
        assert r.right_product[0, 1].neut == oslash(-1)


def test_counterexample_hypotheses():
    r = near_inverse(COUNTER)
    assert r.hypotheses["non-singular"] and r.hypotheses["largest entry zeroless"]
    assert not r.hypotheses["relative uncertainty not an absorber"]
    assert r.failed_hypotheses == ["relative uncertainty not an absorber"]
    with pytest.raises(HypothesisFailed) as info:
        near_inverse(COUNTER, strict=True)
    assert info.value.report.candidate == r.candidate


def test_sarrus_invertible_wrt_oslash_though_singular():
    b = exact_inverse(SARRUS)
    assert b == M("[[1, 0, 0],[0, -1/eps, 1/eps + 1],[0, 1/eps, -1/eps]]")
    assert verify_inverse(SARRUS, b, OSLASH).ok
    assert not is_nonsingular(SARRUS)
    assert inverse_symmetry(SARRUS, b, OSLASH)


def test_real_near_inverse_is_classical():
    a = M("[[2, 1],[1, 1]]")
    r = near_inverse(a)
    assert r.candidate == M("[[1, -1],[-1, 2]]")
    assert r.tolerance == ZERO_N and r.ok


def test_hypotheses_hold_and_inverse_verified():
    a = M("[[1+eps^2*o, eps],[eps, 1+eps^2*o]]")
    r = near_inverse(a)
    assert all(r.hypotheses.values())
    assert r.tolerance == oslash(2)
    assert r.ok
    assert inverse_symmetry(a, r.candidate, r.tolerance)


def test_tolerance_floor():
    # a tolerance above o is not allowed, so the report falls back to o
    r = near_inverse(M("[[1/eps + L, 0],[0, 1]]"))
    assert r.tolerance <= OSLASH


# laws ---------------------------------------------------------------------------------

two_by_two = matrices(2, 2)


@given(two_by_two)
def test_two_by_two_inverse_implies_nonsingular(a):
    try:
        b = exact_inverse(a)
    except ZeroDivisionError:
        return
    candidates = [b]
    r = near_inverse(a)
    if r.candidate is not None:
        candidates.append(r.candidate)
    for c in candidates:
        if verify_inverse(a, c, OSLASH).ok:
            assert is_nonsingular(a)


@given(st.integers(1, 3).flatmap(lambda n: matrices(n, n)))
def test_hypotheses_imply_inclusions(a):
    r = near_inverse(a)
    if all(r.hypotheses.values()):
        assert r.ok
        assert inverse_symmetry(a, r.candidate, r.tolerance)


@given(two_by_two, st.sampled_from([ZERO_N, oslash(2), pound(1), oslash(1), OSLASH]))
def test_tolerance_monotone(a, n):
    r = near_inverse(a)
    if r.candidate is None or not verify_inverse(a, r.candidate, n).ok:
        return
    for m in (oslash(2), pound(1), oslash(1), OSLASH):
        if n <= m:
            assert verify_inverse(a, r.candidate, m).ok
