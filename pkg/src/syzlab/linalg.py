"""Exact linear algebra over F_p.

Dense work happens in ``int64`` numpy arrays (entries stay below ``p < 2**31``
so products fit).  Very sparse matrices are eliminated as dictionaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

SPARSE_DENSITY = 0.05


@dataclass
class FpMatrix:
    """A matrix over F_p held densely or as sparse column dictionaries.

    Sparse storage keeps ``columns[j] = {row: value}`` with no explicit zeros.
    """

    rows: int
    cols: int
    p: int
    dense: np.ndarray | None = None
    columns: list | None = None

    @classmethod
    def from_dense(cls, a, p: int) -> "FpMatrix":
        a = np.asarray(a, dtype=np.int64) % p
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls(a.shape[0], a.shape[1], p, dense=a)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int, int]], p: int) -> "FpMatrix":
        """Build from ``(row, col, value)`` triples; duplicates are summed.

        Storage is sparse when the density is below 5%.
        """
        columns: list[dict] = [dict() for _ in range(cols)]
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            col = columns[c]
            col[r] = (col.get(r, 0) + v) % p
        for col in columns:
            for r in [r for r, v in col.items() if not v]:
                del col[r]
        nnz = sum(len(col) for col in columns)
        if rows * cols and nnz / (rows * cols) >= SPARSE_DENSITY:
            a = np.zeros((rows, cols), dtype=np.int64)
            for c, col in enumerate(columns):
                for r, v in col.items():
                    a[r, c] = v
            return cls(rows, cols, p, dense=a)
        return cls(rows, cols, p, columns=columns)

    @property
    def is_sparse(self) -> bool:
        return self.dense is None

    @property
    def nnz(self) -> int:
        if self.dense is not None:
            return int(np.count_nonzero(self.dense))
        return sum(len(c) for c in self.columns)

    def to_dense(self) -> np.ndarray:
        if self.dense is not None:
            return self.dense
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                a[r, c] = v
        return a


def _as_array(m, p: int) -> np.ndarray:
    if isinstance(m, FpMatrix):
        return m.to_dense() % p
    a = np.asarray(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.size == 0:
        return a.reshape(a.shape[0] if a.ndim == 2 else 0, a.shape[1] if a.ndim == 2 else 0)
    return a % p


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are the first nonzero entry scanning rows top to bottom in each
    column, left to right; the output is unique regardless.
    """
    a = _as_array(m, p).copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rank_dense(a: np.ndarray, p: int) -> int:
    if a.shape[0] < a.shape[1]:
        a = a.T
    a = a.copy()
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = a[r + 1:, c]
        hit = np.flatnonzero(below) + r + 1
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(a[hit, c], a[r, c:])) % p
        r += 1
    return r


def _rank_sparse(vectors: Iterable[dict], p: int) -> int:
    """Rank of a family of sparse vectors by incremental echelon insertion."""
    pivots: dict[int, dict] = {}
    for vec in sorted(vectors, key=len):
        v = dict(vec)
        while v:
            lead = min(v)
            pv = pivots.get(lead)
            if pv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {k: x * inv % p for k, x in v.items()}
                break
            c = v[lead]
            for k, x in pv.items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(pivots)


def rank(m, p: int | None = None) -> int:
    """Rank of a matrix over F_p (``p`` defaults to the matrix's own)."""
    if isinstance(m, FpMatrix):
        p = m.p if p is None else p
        if m.is_sparse:
            return _rank_sparse(m.columns, p)
        return _rank_dense(m.dense % p, p)
    if p is None:
        raise ValueError("prime required for plain arrays")
    a = _as_array(m, p)
    if a.size == 0:
        return 0
    return _rank_dense(a, p)


def kernel_basis(m, p: int | None = None) -> np.ndarray:
    """Basis of the right kernel ``{v : M v = 0}`` as rows of an array.

    Each basis vector has a 1 in one free column and 0 in the other free
    columns, which makes the basis unique.
    """
    if isinstance(m, FpMatrix):
        p = m.p if p is None else p
    a = _as_array(m, p)
    ncols = a.shape[1]
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return basis


def span_dim(vectors, p: int) -> tuple[int, np.ndarray]:
    """Dimension of the span and its reduced echelon basis."""
    a = np.asarray(vectors, dtype=np.int64)
    if a.size == 0:
        width = a.shape[1] if a.ndim == 2 else 0
        return 0, np.zeros((0, width), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    r, pivots = rref(a % p, p)
    return len(pivots), r[: len(pivots)]


def annihilator(basis, p: int, width: int | None = None) -> np.ndarray:
    """Linear forms vanishing on the span of ``basis`` (rows), as kernel rows."""
    a = np.asarray(basis, dtype=np.int64)
    if a.size == 0:
        if width is None:
            raise ValueError("width required for an empty basis")
        return np.eye(width, dtype=np.int64)
    return kernel_basis(a, p)


def inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    inv[1:] = [pow(i, -1, p) for i in range(1, p)]
    return inv


def batched_rank(mats: np.ndarray, p: int, inv: np.ndarray | None = None) -> np.ndarray:
    """Ranks of a stack of square or rectangular matrices ``(B, n, m)`` over F_p."""
    if inv is None:
        inv = inverse_table(p)
    a = np.array(mats, dtype=np.int64) % p
    nb, n, m = a.shape
    ranks = np.zeros(nb, dtype=np.int64)
    free = np.ones((nb, n), dtype=bool)
    for c in range(m):
        cand = (a[:, :, c] != 0) & free
        has = cand.any(axis=1)
        idx = np.flatnonzero(has)
        if idx.size == 0:
            continue
        piv = cand[idx].argmax(axis=1)
        sub = a[idx, :, c:]
        prow = sub[np.arange(idx.size), piv]
        prow = prow * inv[prow[:, 0]][:, None] % p
        factors = sub[:, :, 0].copy()
        factors[np.arange(idx.size), piv] = 0
        factors[~free[idx]] = 0
        sub = (sub - factors[:, :, None] * prow[:, None, :]) % p
        a[idx, :, c:] = sub
        free[idx, piv] = False
        ranks[idx] += 1
    return ranks


def det_mod(m: Sequence[Sequence[int]], p: int) -> int:
    """Determinant by Gaussian elimination (small matrices)."""
    a = [[int(x) % p for x in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


def inverse_mod(m, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p; raises ValueError when singular."""
    a = _as_array(m, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, piv = rref(np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1), p)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return r[:, n:]
