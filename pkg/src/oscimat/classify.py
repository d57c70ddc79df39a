"""Whole-matrix classification from per-order compound analyses.

The classifier runs the sign-symmetric primitivity test on every compound
order of the input.  A full pass certifies the GO label, a pass on every
even order GEO, on every odd order GOO.  These criteria are sufficient
conditions: the NONE label means the criteria were not established, never
that the spectral conclusions are refuted.  The matching spectral shape
predicate is evaluated alongside as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import CapacityError
from .matrices import as_square_matrix, compound
from .primitivity import is_jss_primitive
from .signstruct import JPartition, find_j_strict, sign_pattern
from .spectra import (
    SpectralShape,
    SpectralVerdict,
    Spectrum,
    eigenvalues,
    verify_geo,
    verify_go,
    verify_goo,
)

__all__ = [
    "ClassificationReport",
    "DEFAULT_MAX_DIMENSION",
    "Label",
    "NONE_LABEL_NOTE",
    "OrderVerdict",
    "classify",
    "search_examples",
]

DEFAULT_MAX_DIMENSION = 12

NONE_LABEL_NOTE = (
    "criteria not established; the per-order tests are sufficient conditions only, "
    "so this does not refute any spectral conclusion"
)


class Label(str, Enum):
    GO = "GO"
    GEO = "GEO"
    GOO = "GOO"
    GEO_AND_GOO = "GEO_AND_GOO"
    NONE = "NONE"


@dataclass(frozen=True)
class OrderVerdict:
    """Per-compound-order outcome of the sign-symmetric primitivity test."""

    order: int
    dimension: int
    jss_primitive: bool
    strict: bool
    j_partition: JPartition | None


@dataclass(frozen=True, eq=False)
class ClassificationReport:
    n: int
    per_order: tuple[OrderVerdict, ...]
    label: Label
    spectral: SpectralVerdict | None
    spectrum: Spectrum | None
    tau: float
    spectral_tol: float

    def orders_passing(self) -> tuple[int, ...]:
        return tuple(v.order for v in self.per_order if v.jss_primitive)


def _derive_label(per_order: tuple[OrderVerdict, ...]) -> Label:
    verdicts = {v.order: v.jss_primitive for v in per_order}
    if all(verdicts.values()):
        return Label.GO
    even_ok = all(ok for j, ok in verdicts.items() if j % 2 == 0)
    odd_ok = all(ok for j, ok in verdicts.items() if j % 2 == 1)
    # Even and odd orders together cover every order, so a simultaneous
    # pass already collapsed into GO above; GEO_AND_GOO stays in the label
    # vocabulary for readers of serialized reports.
    if even_ok:
        return Label.GEO
    if odd_ok:
        return Label.GOO
    return Label.NONE


_SHAPE_FOR_LABEL = {
    Label.GO: (SpectralShape.GO, verify_go),
    Label.GEO: (SpectralShape.GEO, verify_geo),
    Label.GOO: (SpectralShape.GOO, verify_goo),
}


def classify(
    a,
    tau: float = 1e-9,
    spectral_tol: float = 1e-6,
    max_dimension: int = DEFAULT_MAX_DIMENSION,
) -> ClassificationReport:
    """Run the per-order tests, derive the label, and cross-check the spectrum.

    The dimension guard keeps the largest compound at a desk-scale size
    (924 rows at n = 12); raise `max_dimension` explicitly to go beyond.
    """
    m = as_square_matrix(a)
    n = m.shape[0]
    if n < 2:
        raise ValueError("classification needs dimension n >= 2")
    if n > max_dimension:
        raise CapacityError(
            f"dimension {n} exceeds the guard {max_dimension}; the middle compound "
            f"would have C({n},{n // 2}) rows - pass a larger max_dimension to override"
        )
    per_order = []
    for j in range(1, n + 1):
        cm = compound(m, j)
        verdict = is_jss_primitive(cm.matrix, tau)
        strict = find_j_strict(sign_pattern(cm.matrix, tau)) is not None
        per_order.append(
            OrderVerdict(
                order=j,
                dimension=cm.dimension,
                jss_primitive=verdict.verdict,
                strict=strict,
                j_partition=verdict.j_partition,
            )
        )
    per_order = tuple(per_order)
    label = _derive_label(per_order)
    spectrum = eigenvalues(m, spectral_tol)
    spectral = None
    if label in _SHAPE_FOR_LABEL:
        _, verifier = _SHAPE_FOR_LABEL[label]
        spectral = verifier(spectrum, spectral_tol)
    return ClassificationReport(
        n=n,
        per_order=per_order,
        label=label,
        spectral=spectral,
        spectrum=spectrum,
        tau=tau,
        spectral_tol=spectral_tol,
    )


def search_examples(
    n: int,
    target: Label,
    trials: int,
    rng_seed: int,
    tau: float = 1e-9,
    spectral_tol: float = 1e-6,
) -> list[np.ndarray]:
    """Rejection-sample matrices whose classification equals `target`.

    Entries are uniform on [-10, 10] rounded to one decimal; the draw is
    deterministic for a fixed seed.  An empty result is a valid outcome.
    """
    if n < 2:
        raise ValueError("search needs dimension n >= 2")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    target = Label(target)
    rng = np.random.default_rng(rng_seed)
    found: list[np.ndarray] = []
    for _ in range(trials):
        candidate = np.round(rng.uniform(-10.0, 10.0, size=(n, n)), 1)
        report = classify(candidate, tau=tau, spectral_tol=spectral_tol)
        if report.label == target:
            found.append(candidate)
    return found
