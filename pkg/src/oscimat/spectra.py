"""Eigenvalue computation and the spectral shape predicates.

The three shapes describe spectra of matrices whose compound matrices are
sign-symmetric primitive at every order (GO), every even order (GEO), or
every odd order (GOO):

* GO   - all eigenvalues simple, real, positive, strictly decreasing in
         modulus.
* GEO  - at most two eigenvalues per modulus level, strict drops after
         sorted positions 2, 4, ...; the pairs (1,2), (3,4), ... have
         opposite arguments; the last eigenvalue is real when n is odd.
* GOO  - the leading eigenvalue is real, positive and strictly dominant;
         at most two per level below with strict drops after positions
         1, 3, ...; the pairs (2,3), (4,5), ... have opposite arguments;
         the last eigenvalue is real when n is even.

Opposite arguments cover both conjugate pairs and same-sign real pairs
(either sign: arguments 0/0 or pi/pi both close under wrap-around).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .errors import DegenerateSpectrumError, EigenSolverError
from .matrices import as_square_matrix, compound

__all__ = [
    "SpectralShape",
    "SpectralVerdict",
    "Spectrum",
    "eigenvalues",
    "kronecker_products",
    "ratio_chain",
    "spectral_sort_key",
    "verify_geo",
    "verify_go",
    "verify_goo",
    "verify_shape",
]


class SpectralShape(str, Enum):
    GO = "GO_SHAPE"
    GEO = "GEO_SHAPE"
    GOO = "GOO_SHAPE"


def spectral_sort_key(z: complex):
    """Total order: modulus descending, |argument| ascending, positive
    argument before negative on ties."""
    arg = cmath.phase(z)
    return (-abs(z), abs(arg), 0 if arg >= 0 else 1)


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a real matrix in deterministic sorted order."""

    eigenvalues: tuple[complex, ...]
    multiplicity_tol: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(z) for z in self.eigenvalues)

    def spectral_radius(self) -> float:
        return abs(self.eigenvalues[0])


def _check_conjugate_closure(values: list[complex], tol: float) -> None:
    pending = [z for z in values if z.imag > 0]
    negatives = [z for z in values if z.imag < 0]
    for z in pending:
        best = None
        for i, w in enumerate(negatives):
            if abs(w - z.conjugate()) <= tol * (1.0 + abs(z)):
                best = i
                break
        if best is None:
            raise EigenSolverError(f"eigenvalue {z} has no conjugate partner within tolerance")
        negatives.pop(best)
    if negatives:
        raise EigenSolverError(f"unpaired conjugate eigenvalues remain: {negatives}")


def eigenvalues(a, tol: float = 1e-6) -> Spectrum:
    """All n eigenvalues of `a`, conjugate-closed and deterministically sorted.

    Delegates to the LAPACK dense nonsymmetric solver (balancing,
    Hessenberg reduction, shifted QR).
    """
    m = as_square_matrix(a)
    try:
        vals = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigenvalue iteration failed: {exc}") from exc
    values = [complex(z) for z in vals]
    _check_conjugate_closure(values, tol)
    values.sort(key=spectral_sort_key)
    return Spectrum(eigenvalues=tuple(values), multiplicity_tol=tol)


def kronecker_products(s: Spectrum, j: int) -> tuple[complex, ...]:
    """All C(n,j) products of j distinct-position eigenvalues, sorted.

    These are exactly the eigenvalues of the order-j compound of any
    matrix with spectrum `s`.
    """
    if not 1 <= j <= s.n:
        raise ValueError(f"order {j} out of range [1, {s.n}]")
    prods = [math.prod(c) for c in combinations(s.eigenvalues, j)]
    prods.sort(key=spectral_sort_key)
    return tuple(prods)


def _is_real(z: complex, tol: float) -> bool:
    return abs(z.imag) <= tol * (1.0 + abs(z))


def _strict_drop(m_hi: float, m_lo: float, tol: float) -> bool:
    return (m_hi - m_lo) > tol * m_hi


def _modulus_levels(moduli, tol: float) -> list[list[int]]:
    """Group sorted moduli into levels of equal modulus (1-based positions).

    A modulus joins the current level when it is within relative `tol` of
    the level's leading (largest) modulus.
    """
    levels: list[list[int]] = []
    head = None
    for pos, m in enumerate(moduli, start=1):
        if head is not None and (head - m) <= tol * head:
            levels[-1].append(pos)
        else:
            levels.append([pos])
            head = m
    return levels


def _snapped_arg(z: complex, tol: float) -> float:
    if _is_real(z, tol):
        return 0.0 if z.real >= 0 else math.pi
    return cmath.phase(z)


def _args_opposite(z1: complex, z2: complex, tol: float) -> bool:
    d = math.remainder(_snapped_arg(z1, tol) + _snapped_arg(z2, tol), 2.0 * math.pi)
    return abs(d) <= tol


@dataclass(frozen=True)
class SpectralVerdict:
    """Outcome of checking a spectrum against one of the three shapes."""

    shape: SpectralShape
    passed: bool
    violations: tuple[str, ...]

    def __post_init__(self):
        if self.passed != (not self.violations):
            raise ValueError("passed must mirror an empty violation list")


def _verdict(shape: SpectralShape, violations: list[str]) -> SpectralVerdict:
    return SpectralVerdict(shape=shape, passed=not violations, violations=tuple(violations))


def verify_go(s: Spectrum, tol: float = 1e-6) -> SpectralVerdict:
    """All eigenvalues real, positive, and strictly separated in modulus."""
    violations: list[str] = []
    for pos, z in enumerate(s.eigenvalues, start=1):
        if not _is_real(z, tol):
            violations.append(f"eigenvalue {pos} is not real: {z}")
        elif z.real <= 0:
            violations.append(f"eigenvalue {pos} is not positive: {z.real}")
    mods = s.moduli()
    for pos in range(1, s.n):
        if not _strict_drop(mods[pos - 1], mods[pos], tol):
            violations.append(
                f"moduli at positions {pos} and {pos + 1} are not strictly separated"
            )
    return _verdict(SpectralShape.GO, violations)


def _level_size_violations(mods, tol: float) -> list[str]:
    out = []
    for level in _modulus_levels(mods, tol):
        if len(level) > 2:
            out.append(f"{len(level)} eigenvalues share one modulus level at positions {level}")
    return out


def verify_geo(s: Spectrum, tol: float = 1e-6) -> SpectralVerdict:
    """Shape with paired circles starting at the top: pairs (1,2), (3,4), ..."""
    violations = _level_size_violations(s.moduli(), tol)
    mods = s.moduli()
    vals = s.eigenvalues
    for pos in range(2, s.n, 2):  # strict drops between positions (2,3), (4,5), ...
        if not _strict_drop(mods[pos - 1], mods[pos], tol):
            violations.append(
                f"no strict modulus drop between positions {pos} and {pos + 1}"
            )
    for pos in range(1, s.n, 2):  # pairs (1,2), (3,4), ...
        if not _args_opposite(vals[pos - 1], vals[pos], tol):
            violations.append(
                f"arguments of eigenvalues {pos} and {pos + 1} are not opposite"
            )
    if s.n % 2 == 1 and not _is_real(vals[-1], tol):
        violations.append(f"last eigenvalue must be real for odd n: {vals[-1]}")
    return _verdict(SpectralShape.GEO, violations)


def verify_goo(s: Spectrum, tol: float = 1e-6) -> SpectralVerdict:
    """Shape with a simple positive dominant eigenvalue and pairs (2,3), (4,5), ..."""
    violations: list[str] = []
    vals = s.eigenvalues
    mods = s.moduli()
    if not _is_real(vals[0], tol):
        violations.append(f"leading eigenvalue is not real: {vals[0]}")
    elif vals[0].real <= 0:
        violations.append(f"leading eigenvalue is not positive: {vals[0].real}")
    violations += _level_size_violations(mods, tol)
    for pos in range(1, s.n, 2):  # strict drops between positions (1,2), (3,4), ...
        if not _strict_drop(mods[pos - 1], mods[pos], tol):
            violations.append(
                f"no strict modulus drop between positions {pos} and {pos + 1}"
            )
    for pos in range(2, s.n, 2):  # pairs (2,3), (4,5), ...
        if not _args_opposite(vals[pos - 1], vals[pos], tol):
            violations.append(
                f"arguments of eigenvalues {pos} and {pos + 1} are not opposite"
            )
    if s.n % 2 == 0 and not _is_real(vals[-1], tol):
        violations.append(f"last eigenvalue must be real for even n: {vals[-1]}")
    return _verdict(SpectralShape.GOO, violations)


_VERIFIERS = {
    SpectralShape.GO: verify_go,
    SpectralShape.GEO: verify_geo,
    SpectralShape.GOO: verify_goo,
}


def verify_shape(s: Spectrum, shape: SpectralShape, tol: float = 1e-6) -> SpectralVerdict:
    return _VERIFIERS[shape](s, tol)


def ratio_chain(a) -> list[float]:
    """Successive ratios of compound spectral radii.

    Element j-1 is rho(compound(a, j)) / rho(compound(a, j-1)) with the
    first element rho(a) itself.  For a matrix of GO shape this chain
    reproduces the eigenvalues in sorted order.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    sigma = float(np.linalg.norm(m, 2))
    if sigma == 0.0:
        raise DegenerateSpectrumError("zero matrix has no spectral-radius ratios")
    out: list[float] = []
    prev = 1.0
    for j in range(1, n + 1):
        rho = eigenvalues(compound(m, j).matrix).spectral_radius()
        # rho(compound at order j-1) is bounded by sigma^(j-1); far below
        # that the ratio is numerically meaningless.
        if j > 1 and prev <= 1e-14 * sigma ** (j - 1):
            raise DegenerateSpectrumError(
                f"spectral radius at order {j - 1} is numerically zero ({prev})"
            )
        out.append(rho / prev)
        prev = rho
    return out
