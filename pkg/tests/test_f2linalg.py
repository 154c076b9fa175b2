"""GF(2) kernels: rref/kernel/solve against independent oracles."""

import random

import pytest
from hypothesis import given, strategies as hst

from stmod.f2linalg import (F2Matrix, F2Span, kernel_basis, rank, rref, solve,
                            solve_matrix, vec_bits, vec_from_bits)


# ---------------------------------------------------------------------------
# oracles


def naive_rank(dense: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on plain lists."""
    m = [row[:] for row in dense]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % 2), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(rows):
            if i != r and m[i][c] % 2:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[r])]
        r += 1
    return r


def random_matrix(rng, rows, cols):
    return F2Matrix.from_rows([rng.getrandbits(cols) for _ in range(rows)], cols)


# ---------------------------------------------------------------------------


def test_rref_identity():
    m = F2Matrix.identity(3)
    reduced, rk, pivots = rref(m)
    assert reduced == m
    assert rk == 3
    assert pivots == [0, 1, 2]


def test_rref_zero():
    reduced, rk, pivots = rref(F2Matrix.zero(2, 5))
    assert rk == 0 and pivots == []


def test_rref_rank_matches_naive_oracle():
    rng = random.Random(20)
    for _ in range(25):
        m = random_matrix(rng, 20, 20)
        assert rank(m) == naive_rank(m.to_dense())


def test_rref_idempotent():
    rng = random.Random(7)
    for _ in range(20):
        m = random_matrix(rng, 9, 13)
        reduced, _, _ = rref(m)
        again, _, _ = rref(reduced)
        assert again == reduced


def test_kernel_identity_empty():
    assert kernel_basis(F2Matrix.identity(5)) == []


def test_kernel_zero_full():
    basis = kernel_basis(F2Matrix.zero(3, 4))
    assert len(basis) == 4
    span = F2Span()
    for v in basis:
        assert span.add(v)


def test_kernel_exhaustive_oracle():
    rng = random.Random(99)
    m = random_matrix(rng, 12, 16)
    basis = kernel_basis(m)
    # oracle: enumerate all 2^16 vectors
    truth = {v for v in range(1 << 16) if m.mat_vec(v) == 0}
    span = F2Span()
    for v in basis:
        assert m.mat_vec(v) == 0
        assert span.add(v), "kernel basis is dependent"
    assert len(truth) == 1 << len(basis)
    assert all(span.contains(v) for v in truth)


def test_solve_identity():
    m = F2Matrix.identity(6)
    assert solve(m, 0b101001) == 0b101001


def test_solve_zero_inconsistent():
    assert solve(F2Matrix.zero(3, 4), 0b010) is None


def test_solve_exhaustive_oracle():
    rng = random.Random(5)
    for _ in range(10):
        m = random_matrix(rng, 10, 10)
        b = rng.getrandbits(10)
        x = solve(m, b)
        truth = next((v for v in range(1 << 10) if m.mat_vec(v) == b), None)
        if truth is None:
            assert x is None
        else:
            assert x is not None and m.mat_vec(x) == b


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(F2Matrix.zero(3, 4), 1 << 3)


def test_solve_matrix_roundtrip():
    rng = random.Random(3)
    a = random_matrix(rng, 8, 5)
    x = F2Matrix.from_rows([rng.getrandbits(4) for _ in range(5)], 4)
    b = a @ x
    got = solve_matrix(a, b)
    assert got is not None and a @ got == b


@given(hst.integers(1, 32), hst.integers(1, 32), hst.randoms(use_true_random=False))
def test_rank_transpose(rows, cols, rnd):
    m = F2Matrix.from_rows([rnd.getrandbits(cols) for _ in range(rows)], cols)
    assert rank(m) == rank(m.transpose())


@given(hst.integers(0, 24), hst.integers(0, 24), hst.randoms(use_true_random=False))
def test_rank_nullity(rows, cols, rnd):
    m = F2Matrix.from_rows([rnd.getrandbits(cols) if cols else 0
                            for _ in range(rows)], cols)
    assert rank(m) + len(kernel_basis(m)) == cols


def test_matmul_and_vec_agree():
    rng = random.Random(11)
    a = random_matrix(rng, 6, 7)
    b = random_matrix(rng, 7, 4)
    prod = a @ b
    for j in range(4):
        assert prod.col(j) == a.mat_vec(b.col(j))


def test_vec_pack_unpack():
    bits = [1, 0, 1, 1, 0]
    assert vec_bits(vec_from_bits(bits), 5) == bits


def test_total_on_degenerate_shapes():
    for m in (F2Matrix.zero(0, 5), F2Matrix.zero(5, 0), F2Matrix.zero(0, 0)):
        reduced, rk, piv = rref(m)
        assert rk == 0 and piv == []
        assert kernel_basis(m) == [1 << j for j in range(m.cols)]
