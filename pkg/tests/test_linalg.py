from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from syzlab.linalg import (FpMatrix, annihilator, batched_rank, det_mod, inverse_mod, kernel_basis,
                           rank, rref, span_dim)


def leibniz_det(a, p):
    """Determinant straight from the permutation expansion."""
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= int(a[i][perm[i]])
        total += term
    return total % p


def minor_rank(a, p):
    """Largest k with a nonzero k x k minor (brute force, small matrices only)."""
    from itertools import combinations
    r, c = a.shape
    for k in range(min(r, c), 0, -1):
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                if leibniz_det(a[np.ix_(rows, cols)], p):
                    return k
    return 0


def test_rank_nullity_on_ten_thousand_matrices():
    rng = np.random.default_rng(0)
    for trial in range(10_000):
        p = (31, 101)[trial % 2]
        r, c = rng.integers(1, 7, size=2)
        a = rng.integers(0, p, size=(r, c))
        if trial % 3 == 0:                      # force rank deficiency
            a[-1] = (a[0] * 3) % p
        k = kernel_basis(a, p)
        assert rank(a, p) + len(k) == c
        assert not np.any(a @ k.T % p)


def test_random_ten_by_ten_blocks_against_minor_expansion():
    rng = np.random.default_rng(1)
    a = rng.integers(0, 31, size=(10, 10))
    for size in (1, 2, 3, 4):
        block = a[:size, :size]
        assert det_mod(block.tolist(), 31) == leibniz_det(block, 31)
        assert rank(block, 31) == minor_rank(block, 31)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_rank_matches_minor_oracle(r, c, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 5, size=(r, c)) * rng.integers(0, 2, size=(r, c))
    assert rank(a, 5) == minor_rank(a, 5)


@given(st.integers(0, 2**32 - 1))
def test_batched_rank_agrees_with_single(seed):
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, 7, size=(40, 5, 5))
    mats[::3, 4] = mats[::3, 0]
    mats[::5] = 0
    assert batched_rank(mats, 7).tolist() == [rank(m, 7) for m in mats]


def test_sparse_and_dense_agree():
    rng = np.random.default_rng(2)
    entries = [(int(rng.integers(200)), int(rng.integers(150)), int(rng.integers(1, 31))) for _ in range(300)]
    m = FpMatrix.from_entries(200, 150, entries, 31)
    assert m.is_sparse
    assert rank(m) == rank(m.to_dense(), 31)


def test_rref_and_span():
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    r, piv = rref(a, 31)
    assert piv == [0, 1]
    dim, basis = span_dim(a, 31)
    assert dim == 2 and basis.shape == (2, 3)
    ann = annihilator(basis, 31)
    assert ann.shape == (1, 3) and not np.any(basis @ ann.T % 31)


def test_inverse_mod():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 31, size=(6, 6))
    while rank(a, 31) < 6:
        a = rng.integers(0, 31, size=(6, 6))
    assert np.array_equal(a @ inverse_mod(a, 31) % 31, np.eye(6, dtype=np.int64))
    with pytest.raises(ValueError):
        inverse_mod(np.zeros((2, 2)), 31)
