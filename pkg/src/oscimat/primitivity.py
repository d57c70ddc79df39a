"""Primitivity of nonnegative patterns and sign-symmetric primitivity.

A nonnegative matrix is primitive when some power of it is entrywise
positive.  Over the structural pattern this depends only on which entries
are nonzero, so the test runs in the boolean and-or semiring.  Testing the
single power (n-1)^2 + 1 (the classical worst-case exponent for primitive
patterns) decides the question with O(log n) boolean squarings.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ToleranceConflictError
from .matrices import as_square_matrix
from .signstruct import JPartition, POS, apply_diag_similarity, find_j, sign_pattern

__all__ = [
    "JssVerdict",
    "as_bool_matrix",
    "bool_pattern",
    "bool_pow_reaches_all",
    "is_jss_primitive",
    "is_primitive",
    "wielandt_exponent",
]


def as_bool_matrix(bits) -> np.ndarray:
    b = np.asarray(bits, dtype=bool)
    if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 1:
        raise ValueError(f"expected a square boolean matrix, got shape {b.shape}")
    return b


def bool_pattern(a, tau: float = 1e-9) -> np.ndarray:
    """Structural pattern of `a`: True where the sign is nonzero."""
    return np.asarray(sign_pattern(a, tau).signs) != 0


def _bool_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # and-or semiring product; float matmul keeps BLAS speed and the
    # nonzero counts (at most n) stay exact.
    return (x.astype(np.float64) @ y.astype(np.float64)) > 0.5


def bool_pow_reaches_all(bits, m: int) -> bool:
    """True iff the m-th and-or power of the pattern is entrywise True."""
    b = as_bool_matrix(bits)
    if m < 1:
        raise ValueError("power must be >= 1")
    result: np.ndarray | None = None
    base = b
    while m:
        if m & 1:
            result = base if result is None else _bool_product(result, base)
        m >>= 1
        if m:
            base = _bool_product(base, base)
    assert result is not None
    return bool(result.all())


def wielandt_exponent(n: int) -> int:
    """Largest power any primitive n-by-n pattern may need to go positive."""
    return (n - 1) ** 2 + 1


def is_primitive(bits) -> bool:
    """True iff some and-or power of the pattern is entrywise True."""
    b = as_bool_matrix(bits)
    return bool_pow_reaches_all(b, wielandt_exponent(b.shape[0]))


@dataclass(frozen=True)
class JssVerdict:
    """Outcome of the sign-symmetric primitivity test with its witness."""

    verdict: bool
    j_partition: JPartition | None


def _similarity_pattern(a: np.ndarray, part: JPartition, tau: float) -> np.ndarray:
    """Pattern of D*A*D after clamping within-tolerance negatives to zero.

    Raises ToleranceConflictError when the similarity image has a negative
    entry beyond tolerance, which no valid witness can produce.
    """
    b = apply_diag_similarity(a, part)
    scale = float(np.abs(b).max())
    if scale == 0.0:
        scale = 1.0
    if (b < -tau * scale).any():
        worst = float(b.min())
        raise ToleranceConflictError(
            f"similarity image has entry {worst} below -tau*scale = {-tau * scale}; "
            "the witness contradicts the sign pattern at this tolerance"
        )
    return np.asarray(sign_pattern(b, tau).signs) == POS


def is_jss_primitive(a, tau: float = 1e-9) -> JssVerdict:
    """Decide whether `a` is diagonally +/-1-similar to a primitive
    nonnegative matrix, returning the witnessing index subset.

    Any valid witness yields the same similarity pattern (every nonzero
    entry turns positive), so one canonical witness decides the verdict.
    """
    m = as_square_matrix(a)
    part = find_j(sign_pattern(m, tau))
    if part is None:
        return JssVerdict(verdict=False, j_partition=None)
    bits = _similarity_pattern(m, part, tau)
    return JssVerdict(verdict=is_primitive(bits), j_partition=part)
