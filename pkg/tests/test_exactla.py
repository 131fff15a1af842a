from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricsplit import exactla
from toricsplit.exactla import FULL_SPAN, IntMatrix

small_ints = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def test_intmatrix_rejects_ragged_and_non_integers():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises((TypeError, ValueError)):
        IntMatrix.from_rows([[1, 2.5]])


def test_intmatrix_accessors():
    M = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert M.shape == (2, 3)
    assert M.column(1) == (2, 5)
    assert M.submatrix([0, 2]).tolist() == [[1, 3], [4, 6]]


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_sympy(rows):
    assert exactla.rank(rows) == sympy.Matrix(rows).rank()


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_determinant_matches_sympy(rows):
    assert exactla.determinant(rows) == sympy.Matrix(rows).det()


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(rows):
    n = len(rows[0])
    K = exactla.rational_kernel_basis(rows)
    assert exactla.rank(rows) + len(K) == n
    for v in K:
        assert not any(exactla.mat_vec(rows, v))


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_integer_kernel_basis_spans_the_lattice(rows):
    n = len(rows[0])
    L = exactla.integer_kernel_basis(rows)
    assert len(L) == n - exactla.rank(rows)
    for v in L:
        assert all(isinstance(x, int) for x in v)
        assert not any(exactla.mat_vec(rows, v))
    # saturation: every primitive rational kernel vector has integer coordinates in L
    for w in exactla.rational_kernel_basis(rows):
        assert exactla.integer_solve(L, w) is not None


def test_integer_kernel_basis_needs_saturation():
    # ker_Q is spanned by (1, -2, 1)·k ; an integer basis must be primitive
    assert exactla.integer_kernel_basis([[2, 1, 0], [0, 1, 2]]) == [(1, -2, 1)]


def test_identity_has_empty_kernel():
    assert exactla.rational_kernel_basis([[1, 0], [0, 1]]) == []
    assert exactla.integer_kernel_basis([[1, 0], [0, 1]]) == []


@given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=5))
@settings(max_examples=100, deadline=None)
def test_hnf_is_canonical(vectors):
    H = exactla.hermite_normal_form(vectors)
    assert exactla.hermite_normal_form(H) == H
    assert exactla.hermite_normal_form(list(reversed(vectors))) == H


def test_primitive():
    assert exactla.primitive([Fraction(1, 2), Fraction(-1, 3), 0]) == (3, -2, 0)
    assert exactla.primitive([0, 0]) == (0, 0)


@given(st.lists(st.lists(small_ints, min_size=5, max_size=5), min_size=1, max_size=4))
@settings(max_examples=100, deadline=None)
def test_orthogonal_complement_kernel_is_span(vectors):
    M = exactla.orthogonal_complement(vectors, 5)
    if exactla.span_dimension(vectors) == 5:
        assert M is FULL_SPAN
        return
    for v in vectors:
        assert not any(exactla.mat_vec(M, v))
    assert exactla.rank(M) == 5 - exactla.span_dimension(vectors)


def test_orthogonal_complement_examples():
    assert exactla.orthogonal_complement([], 3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    M = exactla.orthogonal_complement([(1, -1, -1, 1)], 4)
    assert M.tolist() == [[1, 0, 0, -1], [0, 1, 0, 1], [0, 0, 1, 1]]
    assert not FULL_SPAN


def test_in_span_and_dimension():
    vs = [(1, 0, 1), (0, 1, 1)]
    assert exactla.span_dimension(vs) == 2
    assert exactla.in_span((1, 1, 2), vs)
    assert not exactla.in_span((1, 1, 1), vs)


def test_integer_solve():
    assert exactla.integer_solve([(2, 0), (0, 3)], (4, 9)) == (2, 3)
    assert exactla.integer_solve([(2, 0), (0, 3)], (1, 0)) is None


def test_signed_kernel_vector_known():
    # kernel of [[1,1,1,1],[0,2,3,5]] contains (1,-1,-1,1)
    u = exactla.signed_kernel_vector([[1, 1, 1, 1], [0, 2, 3, 5]], {0, 3}, {1, 2})
    assert u == (1, -1, -1, 1)
    assert exactla.signed_kernel_vector([[1, 1, 1, 1], [0, 2, 3, 5]], {0}, {1}) is None


def test_signed_kernel_vector_rejects_bad_supports():
    M = [[1, 1, 1]]
    with pytest.raises(ValueError):
        exactla.signed_kernel_vector(M, set(), {1})
    with pytest.raises(ValueError):
        exactla.signed_kernel_vector(M, {0}, {0, 1})
    with pytest.raises(ValueError):
        exactla.signed_kernel_vector(M, {0}, {7})
