from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_rref
from poisekit.arith import RatMatrix, rank, rank_nullspace, rref, solve
from poisekit.errors import Inconsistent, InvalidParams

F = Fraction


def M(rows, cols=None):
    return RatMatrix.from_rows(rows, cols)


small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    # bias toward rank deficiency: many zeros and repeated rows
    entry = st.one_of(st.just(F(0)), small)
    data = [draw(st.lists(entry, min_size=cols, max_size=cols)) for _ in range(rows)]
    if rows >= 2 and draw(st.booleans()):
        k = draw(st.sampled_from([F(2), F(-1, 3)]))
        data[-1] = [k * v for v in data[0]]
    return M(data, cols)


def test_rref_identity():
    R, piv = rref(M([[1, 0], [0, 1]]))
    assert R.to_rows() == [(1, 0), (0, 1)]
    assert piv == [0, 1]


def test_rref_proportional_rows():
    R, piv = rref(M([[1, 1], [2, 2]]))
    assert R.to_rows() == [(1, 1), (0, 0)]
    assert piv == [0]


def test_rref_zero():
    R, piv = rref(M([[0, 0], [0, 0]]))
    assert R.to_rows() == [(0, 0), (0, 0)]
    assert piv == []


def test_rref_empty_matrix():
    R, piv = rref(RatMatrix.zeros(0, 3))
    assert (R.rows, R.cols, piv) == (0, 3, [])


def test_rank_nullspace_examples():
    assert rank_nullspace(RatMatrix.identity(2)) == (2, [])
    assert rank_nullspace(M([[1, 2]])) == (1, [(F(-2), F(1))])
    r, basis = rank_nullspace(RatMatrix.zeros(0, 3))
    assert r == 0
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_solve_examples():
    assert solve(RatMatrix.identity(2), [3, 5]) == (3, 5)
    with pytest.raises(Inconsistent):
        solve(M([[1, 1], [2, 2]]), [1, 3])
    assert solve(M([[1, 1]]), [4]) == (4, 0)


def test_solve_rejects_wrong_length():
    with pytest.raises(InvalidParams):
        solve(RatMatrix.identity(2), [1])


def test_matrix_shape_validation():
    with pytest.raises(InvalidParams):
        RatMatrix(2, 2, (F(1),) * 3)
    with pytest.raises(InvalidParams):
        M([[1, 2], [3]])


def test_rejects_floats():
    with pytest.raises(TypeError):
        M([[0.5]])


def test_large_integers_stay_exact():
    # 3^40 exceeds 64 bits; a Vandermonde block must keep full rank
    rows = [[F(3 ** 40 + i) ** k for k in range(5)] for i in range(5)]
    assert rank(M(rows)) == 5


@given(matrices())
def test_rref_matches_textbook_elimination(m):
    R, piv = rref(m)
    expected, expected_piv = naive_rref(m.to_rows())
    assert piv == expected_piv
    assert [list(r) for r in R.to_rows()] == expected


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_nullspace_vectors_are_annihilated(m):
    r, basis = rank_nullspace(m)
    assert r + len(basis) == m.cols
    for v in basis:
        assert all(x == 0 for x in m.matvec(v))


@given(matrices())
def test_rref_idempotent(m):
    R, _ = rref(m)
    assert rref(R)[0] == R


@settings(max_examples=60)
@given(matrices(), st.data())
def test_solve_reproduces_rhs(m, data):
    b = data.draw(st.lists(small, min_size=m.rows, max_size=m.rows))
    try:
        x = solve(m, b)
    except Inconsistent:
        # inconsistency means the augmented rank is larger
        assert rank(m.hstack(RatMatrix(m.rows, 1, tuple(b)))) > rank(m)
        return
    assert list(m.matvec(x)) == b
    _, piv = rref(m)
    assert all(x[j] == 0 for j in range(m.cols) if j not in piv)
