"""Dense square matrices, k-subset combinatorics, minors and compound matrices.

Index subsets are 1-based in the domain model and converted to 0-based
offsets only at the numpy boundary.  All functions are pure; returned
values are never mutated afterwards.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = [
    "CombIndex",
    "CompoundMatrix",
    "as_square_matrix",
    "compound",
    "lex_subsets",
    "minor",
    "rank_subset",
    "unrank_subset",
]


def as_square_matrix(a) -> np.ndarray:
    """Validate and return `a` as a float64 n-by-n array with finite entries."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


@dataclass(frozen=True)
class CombIndex:
    """A strictly increasing k-subset of {1..n} used to address minors."""

    n: int
    k: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"subset size k={self.k} out of range for n={self.n}")
        if len(self.indices) != self.k:
            raise ValueError("index count does not match k")
        if any(not 1 <= i <= self.n for i in self.indices):
            raise ValueError(f"indices {self.indices} out of range [1, {self.n}]")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices {self.indices} must be strictly increasing")

    @property
    def offsets(self) -> tuple[int, ...]:
        """0-based positions for array indexing."""
        return tuple(i - 1 for i in self.indices)


def rank_subset(s: CombIndex) -> int:
    """Lexicographic rank of a k-subset among all k-subsets of {1..n}."""
    r = 0
    prev = 0
    for t, idx in enumerate(s.indices):
        for v in range(prev + 1, idx):
            r += math.comb(s.n - v, s.k - t - 1)
        prev = idx
    return r


def unrank_subset(n: int, k: int, r: int) -> CombIndex:
    """Inverse of :func:`rank_subset`: the k-subset of {1..n} at lex rank `r`."""
    total = math.comb(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total}) for C({n},{k})")
    out = []
    v = 1
    for t in range(k):
        while math.comb(n - v, k - t - 1) <= r:
            r -= math.comb(n - v, k - t - 1)
            v += 1
        out.append(v)
        v += 1
    return CombIndex(n=n, k=k, indices=tuple(out))


def lex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {1..n} in lexicographic order (1-based)."""
    return [tuple(i + 1 for i in c) for c in combinations(range(n), k)]


def minor(a, rows: CombIndex, cols: CombIndex) -> float:
    """Determinant of the submatrix of `a` selected by `rows` x `cols`.

    Evaluated by LU factorization with partial pivoting on the dense
    k-by-k submatrix.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if rows.k != cols.k:
        raise ValueError(f"row subset size {rows.k} != column subset size {cols.k}")
    if rows.n != n or cols.n != n:
        raise ValueError(f"subset ambient dimension does not match matrix dimension {n}")
    sub = m[np.ix_(rows.offsets, cols.offsets)]
    return float(np.linalg.det(sub))


@dataclass(frozen=True, eq=False)
class CompoundMatrix:
    """Matrix of all order-j minors, rows/columns in lex subset order."""

    source_n: int
    order: int
    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def index_sets(self) -> list[tuple[int, ...]]:
        """Row/column labels: the order-j subsets of {1..source_n}."""
        return lex_subsets(self.source_n, self.order)


# Cap the scratch tensor of stacked submatrices at roughly this many floats
# per block (~32 MB); only matters for compounds of large matrices.
_BLOCK_FLOATS = 1 << 22


def compound(a, j: int) -> CompoundMatrix:
    """The C(n,j)-by-C(n,j) matrix of all j-by-j minors of `a`.

    Entry (r, s) is the minor with rows `unrank_subset(n, j, r)` and
    columns `unrank_subset(n, j, s)`.  Minors of one block of row
    subsets are evaluated as a stacked LU factorization.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if not 1 <= j <= n:
        raise ValueError(f"compound order {j} out of range [1, {n}]")
    if j == 1:
        # 1x1 minors are the entries themselves; skip the LU path, which
        # costs the last bit through its log/exp round trip.
        return CompoundMatrix(source_n=n, order=1, matrix=m.copy())
    subs = np.array(list(combinations(range(n), j)), dtype=np.intp)
    dim = subs.shape[0]
    out = np.empty((dim, dim))
    block = max(1, _BLOCK_FLOATS // max(1, dim * j * j))
    for start in range(0, dim, block):
        rows = subs[start : start + block]
        stacked = m[rows[:, None, :, None], subs[None, :, None, :]]
        out[start : start + block] = np.linalg.det(stacked)
    return CompoundMatrix(source_n=n, order=j, matrix=out)
