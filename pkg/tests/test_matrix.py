import pytest
from hypothesis import given
from hypothesis import strategies as st

from extnum import (
    OSLASH,
    FlexMatrix,
    FlexVector,
    Relation,
    ShapeMismatch,
    assoc_check,
    distrib_matrix_left,
    distrib_matrix_right,
    distrib_scalar_left,
    distrib_scalar_right,
    lift,
    madd,
    mmul,
    mneg,
    msubset,
    near_unit_vector,
    neutricial_part,
    oslash,
    parse_matrix,
    parse_scalar,
    pound,
    smul,
    transpose,
)
from helpers import externals, matrices, nonnegative_externals

M = parse_matrix


def test_additive_inverse_gives_neutricial_part():
    a = M("[[1+o, eps*L],[0, 2]]")
    assert madd(a, mneg(a)) == M("[[o, eps*L],[0, 0]]")
    assert neutricial_part(a) == M("[[o, eps*L],[0, 0]]")
    assert madd(a, neutricial_part(a)) == a
    assert madd(a, FlexMatrix.zeros(2, 2)) == a


def test_identity_and_zero_scalar():
    a = M("[[1+o, eps*L, 3],[1/eps, o, -2+eps^2*o]]")
    assert mmul(FlexMatrix.identity(2), a) == a == mmul(a, FlexMatrix.identity(3))
    assert smul(0, a) == FlexMatrix.zeros(2, 3)


def test_associativity_counterexample():
    a = M("[[1, 1],[0, 0]]")
    b = M("[[1, 0],[-1, 0]]")
    c = M("[[o],[o]]")
    r = assoc_check(a, b, c)
    assert r.left == M("[[0],[0]]")
    assert r.right == M("[[o],[0]]")
    assert r.relation is Relation.LEFT_IN_RIGHT is Relation.STRICT_SUBSET


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        madd(M("[[1, 2]]"), M("[[1],[2]]"))
    with pytest.raises(ShapeMismatch):
        mmul(M("[[1, 2]]"), M("[[1, 2]]"))
    with pytest.raises(ShapeMismatch):
        FlexMatrix([[1, 2], [3]])


def test_aggregates():
    a = M("[[1+o, eps*L],[-3/eps + L, eps^2]]")
    assert a.max_neutrix() == pound(0)
    assert a.min_neutrix() == lift(0).neut
    assert a.max_abs() == parse_scalar("3/eps + L")
    assert a.min_abs() == parse_scalar("eps^2")


def test_vectors():
    assert FlexVector([lift(OSLASH), lift(pound(1))]).is_neutrix_vector()
    assert near_unit_vector(1, [OSLASH] * 3) == FlexVector([lift(OSLASH), parse_scalar("1+o"), lift(OSLASH)])
    v = FlexVector([parse_scalar("eps + eps^2*o"), lift(OSLASH), parse_scalar("eps + eps^2*L")])
    assert v.is_upper_neutrix_vector() and not v.is_neutrix_vector()


def test_scalar_distributivity_strict_case():
    # an infinitesimal scalar against opposite entries
    a, b = M("[[1, 1]]"), M("[[-1, -1]]")
    r = distrib_scalar_left(lift(OSLASH), a, b)
    assert r.relation is Relation.STRICT_SUBSET
    assert r.left == M("[[0, 0]]") and r.right == M("[[o, o]]")


# laws -------------------------------------------------------------------------------


@given(matrices())
def test_regular_semigroup(a):
    assert madd(a, madd(mneg(a), a)) == a
    assert madd(a, mneg(a)) == neutricial_part(a)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.data())
def test_transpose_of_product(m, k, n, data):
    a = data.draw(matrices(m, k))
    b = data.draw(matrices(k, n))
    assert transpose(mmul(a, b)) == mmul(transpose(b), transpose(a))


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_subdistributive_inclusions(m, n, data):
    a, b = data.draw(matrices(m, n)), data.draw(matrices(m, n))
    s, t = data.draw(externals()), data.draw(externals())
    c = data.draw(matrices(n, 2))
    d = data.draw(matrices(2, m))
    for r in (
        distrib_scalar_left(s, a, b),
        distrib_scalar_right(s, t, a),
        distrib_matrix_left(d, a, b),
        distrib_matrix_right(a, b, c),
    ):
        assert msubset(r.left, r.right)
        if r.guaranteed == "equal":
            assert r.relation is Relation.EQUAL


@given(st.data())
def test_nonnegative_associativity(data):
    nn = nonnegative_externals()
    a = data.draw(matrices(2, 2, nn))
    b = data.draw(matrices(2, 3, nn))
    c = data.draw(matrices(3, 1, nn))
    assert assoc_check(a, b, c).relation is Relation.EQUAL


@given(st.data())
def test_neutricial_middle_associativity(data):
    a = data.draw(matrices(2, 2))
    b = neutricial_part(data.draw(matrices(2, 2)))
    c = data.draw(matrices(2, 2))
    assert assoc_check(a, b, c).relation is Relation.EQUAL


@given(st.data())
def test_real_first_factor(data):
    a = data.draw(matrices(2, 2)).representatives()
    a = FlexMatrix(a)
    b, c = data.draw(matrices(2, 2)), data.draw(matrices(2, 1))
    r = assoc_check(a, b, c)
    assert r.relation.left_in_right
    assert r.left == mmul(mmul(a, b), c)


def test_uniform_neutrix_matrices_distribute():
    a = M("[[2 + eps^2*o, 3 + eps^2*o]]")
    b = M("[[5 + eps^2*o, 1 + eps^2*o]]")
    r = distrib_scalar_left(parse_scalar("4 + eps^2*o"), a, b)
    assert r.relation is Relation.EQUAL
    assert oslash(2) == r.left[0, 0].neut
