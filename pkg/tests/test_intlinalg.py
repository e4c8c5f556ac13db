import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foxcup.intlinalg import (
    determinant,
    hnf_with_transform,
    identity,
    is_hermite,
    matmul,
    null_space_basis,
    rational_rank,
    rref,
    snf_invariant_factors,
    zeros,
)

from .oracles import invariant_factors_by_minors, random_unimodular, sympy_rank
from .strategies import small_int_matrices


def test_hnf_identity():
    H, C = hnf_with_transform(identity(3))
    assert H == identity(3) and C == identity(3)


def test_hnf_two_by_two():
    T = [[2, 4], [1, 3]]
    H, C = hnf_with_transform(T)
    assert H == [[1, 1], [0, 2]]
    assert matmul(C, T) == H
    assert abs(determinant(C)) == 1
    # [[1, 3], [0, 2]] is the same lattice before reducing the 3 above pivot 2
    assert hnf_with_transform([[1, 3], [0, 2]])[0] == H


def test_hnf_zero_matrix():
    H, C = hnf_with_transform(zeros(2, 3))
    assert H == zeros(2, 3) and C == identity(2)


def test_hnf_empty():
    assert hnf_with_transform([], 3) == ([], [])


def test_hnf_shape_conventions():
    H, C = hnf_with_transform([[0, 3, 1], [0, 6, 5], [4, 0, 0], [0, 0, 0]])
    assert is_hermite(H)
    assert H[-1] == [0, 0, 0]
    assert H[0][0] == 4 and 0 <= H[0][1] < H[1][1]


@given(small_int_matrices)
def test_hnf_properties(T):
    H, C = hnf_with_transform(T)
    assert matmul(C, T) == H
    assert abs(determinant(C)) == 1
    assert is_hermite(H)
    H2, C2 = hnf_with_transform(H)
    assert H2 == H and C2 == identity(len(H))


@given(small_int_matrices)
def test_determinant_matches_sympy(T):
    import sympy

    k = min(len(T), len(T[0]))
    sq = [row[:k] for row in T[:k]]
    assert determinant(sq) == int(sympy.Matrix(sq).det())


@pytest.mark.parametrize(
    "M, expected",
    [
        ([[2, 0], [0, 4]], [2, 4]),
        ([[2, 0], [0, 3]], [1, 6]),
        (zeros(2, 3), []),
        ([[12, 6, 4], [3, 9, 6], [2, 16, 14]], [1, 10, 30]),
        ([], []),
    ],
)
def test_snf_examples(M, expected):
    assert snf_invariant_factors(M) == expected


def test_snf_examples_agree_with_minors_oracle():
    for M in ([[2, 0], [0, 3]], [[12, 6, 4], [3, 9, 6], [2, 16, 14]], [[4, 6], [6, 9], [2, 3]]):
        assert snf_invariant_factors(M) == invariant_factors_by_minors(M)


@given(small_int_matrices, st.integers(0, 2**32))
def test_snf_unimodular_invariance(M, seed):
    rng = random.Random(seed)
    d = snf_invariant_factors(M)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert len(d) == sympy_rank(M)
    U = random_unimodular(rng, len(M))
    V = random_unimodular(rng, len(M[0]))
    assert snf_invariant_factors(matmul(matmul(U, M), V)) == d
    assert d == invariant_factors_by_minors(M)


def test_rank_and_null_space_examples():
    assert rational_rank(identity(3)) == 3
    assert null_space_basis(identity(3)) == []
    assert rational_rank(zeros(2, 3)) == 0
    assert null_space_basis(zeros(2, 3)) == identity(3)
    assert rational_rank([[1, 1, 0]]) == 1
    basis = null_space_basis([[1, 1, 0]])
    assert basis == [[1, -1, 0], [0, 0, 1]]
    # same row space as the free-variable basis [-1, 1, 0], [0, 0, 1]
    assert rref([[-1, 1, 0], [0, 0, 1]])[0] == basis


def test_null_space_without_rows():
    assert null_space_basis([], 2) == identity(2)


def test_rref_is_exact():
    R, piv = rref([[3, 1], [1, 3]])
    assert R == identity(2) and piv == [0, 1]
    R, _ = rref([[2, 1, 1]])
    assert R == [[1, Fraction(1, 2), Fraction(1, 2)]]


@given(small_int_matrices)
def test_rank_nullity(M):
    N = null_space_basis(M)
    assert rational_rank(M) + len(N) == len(M[0])
    assert rational_rank(M) == sympy_rank(M)
    for v in N:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in M)
    if N:
        assert rref(N)[0] == N
