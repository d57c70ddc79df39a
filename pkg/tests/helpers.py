"""Independent oracles used to cross-check the library.

Everything in here is deliberately implemented by a different route than the
production code: determinants by cofactor expansion instead of LU, primitivity
by explicit cycle structure instead of a single Wielandt power, sign-split
searches by exhaustive enumeration instead of graph colouring.  Agreement of
two unrelated algorithms is the point.
"""

from __future__ import annotations

import math
from itertools import combinations

import networkx as nx
import numpy as np
from scipy.optimize import linear_sum_assignment


def laplace_det(m) -> float:
    """Determinant by recursive cofactor expansion along the first row.

    O(n!) and numerically naive, which is fine for the n <= 6 matrices the
    tests feed it; the value is what matters, not the speed.
    """
    rows = [list(map(float, r)) for r in np.asarray(m, dtype=np.float64)]
    return _laplace(rows)


def _laplace(rows) -> float:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0.0
    for c, pivot in enumerate(rows[0]):
        if pivot == 0.0:
            continue
        sub = [r[:c] + r[c + 1:] for r in rows[1:]]
        total += (-1.0) ** c * pivot * _laplace(sub)
    return total


def oracle_minor(m, row_subset, col_subset) -> float:
    m = np.asarray(m, dtype=np.float64)
    rows = [i - 1 for i in row_subset]
    cols = [j - 1 for j in col_subset]
    return laplace_det(m[np.ix_(rows, cols)])


def oracle_compound(m, j) -> np.ndarray:
    """Minor matrix assembled one cofactor expansion at a time."""
    m = np.asarray(m, dtype=np.float64)
    n = m.shape[0]
    subsets = list(combinations(range(1, n + 1), j))
    out = np.empty((len(subsets), len(subsets)), dtype=np.float64)
    for a, rs in enumerate(subsets):
        for b, cs in enumerate(subsets):
            out[a, b] = oracle_minor(m, rs, cs)
    return out


def valid_splits(signs, strict: bool):
    """All index sets J (as frozensets of 1-based indices, 1 never in J)
    whose +/-1 diagonal similarity clears the negative entries.

    Brute force over every one of the 2^n sign assignments; the half with
    index 1 flipped gives the same similarity, so only splits with 1 on the
    positive side are reported.
    """
    signs = np.asarray(signs)
    n = signs.shape[0]
    found = []
    for mask in range(2 ** n):
        if mask & 1:
            continue  # canonical representative keeps index 1 out of J
        side = [(mask >> i) & 1 for i in range(n)]
        ok = True
        for i in range(n):
            for k in range(n):
                s = int(signs[i, k])
                crossing = side[i] != side[k]
                if strict:
                    if s == 0 or (s < 0) != crossing:
                        ok = False
                        break
                else:
                    if (s < 0 and not crossing) or (s > 0 and crossing):
                        ok = False
                        break
            if not ok:
                break
        if ok:
            found.append(frozenset(i + 1 for i in range(n) if side[i]))
    return found


def oracle_primitive(bits) -> bool:
    """Primitivity via the classical digraph characterisation: strongly
    connected and the gcd of all simple cycle lengths equals 1."""
    bits = np.asarray(bits, dtype=bool)
    n = bits.shape[0]
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, k) for i in range(n) for k in range(n) if bits[i, k])
    if not nx.is_strongly_connected(g):
        return False
    lengths = [len(c) for c in nx.simple_cycles(g)]
    if not lengths:
        return False
    return math.gcd(*lengths) == 1


def sequential_power_primitive(bits, cap: int) -> bool:
    """Primitivity by checking A, A^2, ..., A^cap one multiplication at a
    time over the and-or semiring."""
    bits = np.asarray(bits, dtype=bool)
    cur = bits.copy()
    for _ in range(cap - 1):
        if cur.all():
            return True
        cur = (cur.astype(np.int64) @ bits.astype(np.int64)) > 0
    return bool(cur.all())


def match_multisets(xs, ys):
    """Pair two complex multisets by a minimum-cost perfect matching."""
    xs = np.asarray(xs, dtype=np.complex128)
    ys = np.asarray(ys, dtype=np.complex128)
    assert xs.shape == ys.shape
    cost = np.abs(xs[:, None] - ys[None, :])
    r, c = linear_sum_assignment(cost)
    return xs[r], ys[c]


def assert_multisets_close(xs, ys, rtol: float) -> None:
    a, b = match_multisets(xs, ys)
    scale = max(float(np.abs(a).max(initial=0.0)),
                float(np.abs(b).max(initial=0.0)), 1.0)
    for x, y in zip(a, b):
        bound = rtol * max(abs(x), abs(y), rtol * scale)
        assert abs(x - y) <= bound, f"{x} vs {y} (|diff|={abs(x - y):.3e})"


def all_sign_patterns(n: int):
    """Every n x n matrix over {-1, 0, 1}, yielded as int arrays."""
    cells = n * n
    for code in range(3 ** cells):
        vals = np.empty(cells, dtype=np.int8)
        c = code
        for i in range(cells):
            vals[i] = c % 3 - 1
            c //= 3
        yield vals.reshape(n, n)
