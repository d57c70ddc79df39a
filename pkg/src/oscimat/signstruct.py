"""Sign patterns, sign-symmetrizing index sets, and +/-1 diagonal similarity.

A matrix is sign-symmetrizable when some subset J of its indices yields a
diagonal matrix D (diag entries -1 on J, +1 elsewhere) with D*A*D entrywise
nonnegative; in the strict variant D*A*D is entrywise positive.  Finding J
is a parity 2-coloring problem on the index set: a positive entry (i, k)
forces i and k to the same side, a negative entry forces opposite sides.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import as_square_matrix

__all__ = [
    "NEG",
    "POS",
    "ZERO",
    "JPartition",
    "SignPattern",
    "apply_diag_similarity",
    "find_j",
    "find_j_strict",
    "sign_pattern",
]

NEG, ZERO, POS = -1, 0, 1


@dataclass(frozen=True, eq=False)
class SignPattern:
    """Entrywise signs of a matrix under a relative zero tolerance."""

    n: int
    signs: np.ndarray  # int8, values in {-1, 0, +1}

    def __post_init__(self):
        s = np.asarray(self.signs)
        if s.shape != (self.n, self.n):
            raise ValueError(f"sign array shape {s.shape} does not match n={self.n}")


def sign_pattern(a, tau: float = 1e-9) -> SignPattern:
    """Extract the sign pattern of `a`.

    An entry counts as zero when its magnitude is at most tau times the
    largest magnitude in the matrix (scale 1 for the all-zero matrix).
    """
    m = as_square_matrix(a)
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    scale = float(np.abs(m).max())
    if scale == 0.0:
        scale = 1.0
    signs = np.sign(m).astype(np.int8)
    signs[np.abs(m) <= tau * scale] = ZERO
    return SignPattern(n=m.shape[0], signs=signs)


@dataclass(frozen=True)
class JPartition:
    """A subset J of {1..n} with its induced +/-1 similarity diagonal.

    `members` is the canonical side: the one not containing the smallest
    index of any constraint component.  The complement describes the same
    unordered bipartition and induces the same similarity image.
    """

    n: int
    members: frozenset[int]
    diag_signs: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= i <= self.n for i in self.members):
            raise ValueError("members out of range")
        expected = tuple(-1 if i + 1 in self.members else 1 for i in range(self.n))
        if self.diag_signs != expected:
            raise ValueError("diag_signs inconsistent with members")

    @classmethod
    def from_members(cls, n: int, members) -> "JPartition":
        ms = frozenset(int(i) for i in members)
        signs = tuple(-1 if i + 1 in ms else 1 for i in range(n))
        return cls(n=n, members=ms, diag_signs=signs)

    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if i not in self.members)

    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Both sides of the bipartition, the side holding index 1 first."""
        inside = tuple(sorted(self.members))
        outside = self.complement()
        if 1 in self.members:
            return inside, outside
        return outside, inside


def find_j_strict(p: SignPattern) -> JPartition | None:
    """Witness for the strict variant: every entry nonzero and negative
    exactly across the bipartition.  Returns None when no witness exists.
    """
    s = np.asarray(p.signs)
    if (s == ZERO).any():
        return None
    # With no zeros every pair is constrained, so row 1 determines the
    # coloring; a full pass over ordered pairs checks consistency.
    colors = (s[0] == NEG).astype(np.int8)
    colors[0] = 0
    split = colors[:, None] != colors[None, :]
    if not ((s == NEG) == split).all():
        return None
    members = {int(i) + 1 for i in np.nonzero(colors)[0]}
    return JPartition.from_members(p.n, members)


def find_j(p: SignPattern) -> JPartition | None:
    """Witness for the non-strict variant: zero entries are unconstrained.

    The constraint graph is 2-colored per connected component; each
    component is oriented so that its smallest vertex lands outside J.
    A negative diagonal entry is unsatisfiable.
    """
    s = np.asarray(p.signs)
    n = p.n
    if (np.diag(s) == NEG).any():
        return None
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for k in range(i + 1, n):
            for val in (s[i, k], s[k, i]):
                if val != ZERO:
                    parity = 1 if val == NEG else 0
                    adj[i].append((k, parity))
                    adj[k].append((i, parity))
    colors = [-1] * n
    for root in range(n):
        if colors[root] != -1:
            continue
        colors[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for v, parity in adj[u]:
                want = colors[u] ^ parity
                if colors[v] == -1:
                    colors[v] = want
                    queue.append(v)
                elif colors[v] != want:
                    return None
    members = {i + 1 for i in range(n) if colors[i] == 1}
    return JPartition.from_members(n, members)


def apply_diag_similarity(a, part: JPartition) -> np.ndarray:
    """D*A*D with D = diag(part.diag_signs); entry (i,k) becomes s_i*s_k*a_ik."""
    m = as_square_matrix(a)
    if m.shape[0] != part.n:
        raise ValueError(f"partition dimension {part.n} does not match matrix {m.shape[0]}")
    s = np.asarray(part.diag_signs, dtype=np.float64)
    return np.outer(s, s) * m
