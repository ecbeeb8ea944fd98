from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from polyvf.linalg import (
    Echelon,
    Matrix,
    Subspace,
    intersection,
    nullspace,
    primitive,
    rank,
    rref,
    span_union,
    to_int_vector,
)

F = Fraction


def test_rref_textbook_example():
    M = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, r = rref(M)
    assert r == 2
    assert R == Matrix([[1, 0, 1], [0, 1, 1], [0, 0, 0]])


def test_rank_and_nullspace():
    M = Matrix([[1, 1, 0, 0], [0, 0, 1, 1]])
    assert rank(M) == 2
    K = nullspace(M)
    assert K.dim == 2
    for v in K.basis:
        assert all(x == 0 for x in M.apply(v))


def test_to_int_vector_is_primitive():
    assert to_int_vector([F(1, 2), F(0), F(-3, 4)]) == {0: 2, 2: -3}
    assert primitive({1: 4, 3: -6}) == {1: 2, 3: -3}


def test_echelon_insert_and_contains():
    e = Echelon(3)
    assert e.insert({0: 1, 1: 1})
    assert not e.insert({0: 2, 1: 2})
    assert e.insert({1: 1, 2: 1})
    assert e.contains({0: 1, 2: -1})
    assert e.rank == 2 and not e.is_full()
    assert e.kernel_vectors()


def test_subspace_operations():
    S = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    T = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    assert intersection(S, T) == Subspace.span([[0, 1, 0]], 3)
    assert span_union(S, T.basis) == Subspace.full(3)
    assert Subspace.zero(3).is_subspace_of(S)
    assert S.coordinates([2, 3, 0]) == (F(2), F(3))
    assert S.combine([2, 3]) == (F(2), F(3), F(0))


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=4)
)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    M = Matrix(rows)
    assert rank(M) + nullspace(M).dim == len(rows[0])
    assert rank(M) == rank(M.transpose())


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rref_is_unique_under_row_permutation(rows):
    R1, _ = rref(Matrix(rows))
    R2, _ = rref(Matrix(list(reversed(rows))))
    assert R1 == R2
