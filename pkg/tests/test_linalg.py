from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix as SMatrix
from sympy.matrices.normalforms import invariant_factors

from combquot.linalg import (
    LinalgError,
    determinant,
    hermite_normal_form,
    hnf,
    integer_inverse,
    integer_kernel,
    is_unimodular,
    matmul,
    primitive,
    primitive_rational,
    rank,
    same_row_lattice,
    smith_invariants,
    transposed_gale_dual,
    unimodular_extension,
)

small = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


def test_hnf_small_example():
    # the example [[2,4],[1,3]] has determinant 2; our reduced upper form
    H = hnf([[2, 4], [1, 3]])
    assert H == ((1, 1), (0, 2))
    assert same_row_lattice(H, [[1, 3], [0, 2]])


def test_kernel_examples():
    assert integer_kernel([[1, 1, 1]]) == ((1, 0, -1), (0, 1, -1))
    assert integer_kernel([[1, -1]]) == ((1, 1),)
    assert integer_kernel([[2, 4]]) == ((2, -1),)


def test_gale_rank_deficient():
    with pytest.raises(LinalgError, match="weight matrix not of full rank"):
        transposed_gale_dual([[1, 2, 3], [2, 4, 6]])


def test_primitive():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive_rational((Fraction(1, 2), Fraction(-1, 3))) == (3, -2)
    with pytest.raises(LinalgError):
        primitive((0, 0))


@given(matrices())
def test_hnf_properties(A):
    H, U = hermite_normal_form(A)
    assert is_unimodular(U)
    assert matmul(U, A) == H
    # echelon, positive pivots, entries above pivots reduced
    last = -1
    for i, row in enumerate(H):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(r) for r in H[i:])
            break
        p = nz[0]
        assert p > last and row[p] > 0
        for r in H[:i]:
            assert 0 <= r[p] < row[p]
        last = p
    assert len(hnf(A)) == rank(A)


@given(matrices())
def test_kernel_saturated(A):
    K = integer_kernel(A)
    n = len(A[0])
    assert len(K) == n - rank(A)
    for k in K:
        assert all(sum(a * x for a, x in zip(row, k)) == 0 for row in A)
    if K:
        assert smith_invariants(K) == (1,) * len(K)


@given(matrices())
def test_smith_against_sympy(A):
    ours = smith_invariants(A)
    theirs = [abs(int(x)) for x in invariant_factors(SMatrix(A)) if x != 0]
    assert list(ours) == theirs


@given(st.lists(small, min_size=1, max_size=5).filter(lambda v: primitive(v) == tuple(v)
                                                      if any(v) else False))
def test_unimodular_extension(v):
    M = unimodular_extension(v)
    assert M[0] == tuple(v)
    assert abs(determinant(M)) == 1
    assert matmul(M, integer_inverse(M)) == tuple(tuple(int(i == j) for j in range(len(v)))
                                                  for i in range(len(v)))
