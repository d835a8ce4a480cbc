from fractions import Fraction
import random

from hypothesis import given, settings, strategies as st

from quadric_sheaves.linalg import (PRIMES, QQ, PrimeField, bareiss_rank, field_from_name,
                                    kernel_basis, matvec, rank, rref, solve, sparse_kernel,
                                    sparse_rank, dense_to_sparse)
from quadric_sheaves.cox import basis
from quadric_sheaves.points import eval_matrix, general_points

small = st.integers(-5, 5)
matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_trivial():
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0] * 5 for _ in range(3)]) == 0


def test_rank_evaluation_matrix_eight_points():
    Z = general_points(8, seed=3)
    m = eval_matrix(Z, (2, 2))
    assert len(m[0]) == 9 and len(m) == 8
    assert rank(m) == 8
    for p in PRIMES[:2]:
        assert rank(m, PrimeField(p)) == 8


def test_kernel_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    (v,) = kernel_basis([[1, -1]])
    assert v[0] == v[1] != 0
    Z = general_points(2, seed=5)
    assert len(kernel_basis(eval_matrix(Z, (1, 1)), QQ, len(basis(0, (1, 1))))) == 2


def test_solve_examples():
    b = [Fraction(3), Fraction(-2)]
    assert solve([[1, 0], [0, 1]], b) == b
    assert solve([[0, 0], [0, 0]], [1, 0]) is None


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_rank_agrees_across_methods(m):
    r = rank(m)
    assert r == bareiss_rank(m)
    assert r == len(rref(m, QQ, len(m[0]))[1])
    # entries are tiny, so reduction mod a large prime cannot lose rank
    assert rank(m, PrimeField(PRIMES[0])) == r


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_rank_nullity(m):
    n = len(m[0])
    ker = kernel_basis(m, QQ, n)
    assert len(ker) + rank(m) == n
    for v in ker:
        assert all(x == 0 for x in matvec(m, v))


@given(matrices, st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_solve_consistent_system(m, r):
    x = [r.randint(-4, 4) for _ in m[0]]
    b = matvec(m, x)
    y = solve(m, b)
    assert y is not None
    assert list(matvec(m, y)) == list(b)


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_sparse_matches_dense(m):
    assert sparse_rank(dense_to_sparse(m)) == rank(m)
    cols = [{r: m[r][c] for r in range(len(m)) if m[r][c]} for c in range(len(m[0]))]
    ker = sparse_kernel(cols)
    assert len(ker) == len(m[0]) - rank(m)


def test_field_names():
    assert field_from_name("Q") is QQ
    F = field_from_name("Fp:101")
    assert F.p == 101 and F.name == "Fp:101"
    assert F(F(5) * F.inv(F(5))) == 1


def test_rank_mod_p_can_drop():
    assert rank([[101]], QQ) == 1
    assert rank([[101]], PrimeField(101)) == 0


def test_random_rational_matrices_rank_over_primes():
    rng = random.Random(7)
    for _ in range(30):
        m = [[Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(5)] for _ in range(4)]
        assert rank(m, PrimeField(PRIMES[1])) == rank(m)
