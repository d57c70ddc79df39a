"""Report serialization shared by the CLI and the HTTP service.

JSON payloads are plain dicts built here so both frontends emit the same
fields; text reports use 6 significant digits and print index bipartitions
as "{1,3} | {2}" with the side containing index 1 first.
"""
from __future__ import annotations

import numpy as np

from .classify import ClassificationReport, Label, NONE_LABEL_NOTE, OrderVerdict
from .matrices import CompoundMatrix
from .matrixio import matrix_payload
from .signstruct import JPartition
from .spectra import SpectralVerdict, Spectrum

__all__ = [
    "classification_to_dict",
    "classification_to_text",
    "compound_to_dict",
    "compound_to_text",
    "partition_to_dict",
    "render_bipartition",
    "search_to_dict",
    "search_to_text",
    "spectrum_to_dict",
    "spectrum_to_text",
    "verify_to_dict",
    "verify_to_text",
]


def _g(value: float) -> str:
    return f"{value:.6g}"


def _format_complex(z: complex) -> str:
    if z.imag == 0:
        return _g(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{_g(z.real)} {sign} {_g(abs(z.imag))}i"


def _format_set(indices) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def render_bipartition(part: JPartition | None) -> str:
    if part is None:
        return "none"
    first, second = part.sides()
    return f"{_format_set(first)} | {_format_set(second)}"


def partition_to_dict(part: JPartition | None) -> dict | None:
    if part is None:
        return None
    return {
        "members": sorted(part.members),
        "complement": list(part.complement()),
        "diag_signs": list(part.diag_signs),
    }


def _complex_to_dict(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def spectrum_to_dict(s: Spectrum) -> dict:
    return {
        "n": s.n,
        "eigenvalues": [_complex_to_dict(z) for z in s.eigenvalues],
        "multiplicity_tol": s.multiplicity_tol,
    }


def spectrum_to_text(s: Spectrum) -> str:
    lines = [f"eigenvalues ({s.n}), modulus descending:"]
    lines += [f"  lambda_{i} = {_format_complex(z)}" for i, z in enumerate(s.eigenvalues, 1)]
    return "\n".join(lines)


def verdict_to_dict(v: SpectralVerdict) -> dict:
    return {
        "shape": v.shape.value,
        "passed": v.passed,
        "violations": list(v.violations),
    }


def verify_to_dict(v: SpectralVerdict, s: Spectrum) -> dict:
    out = verdict_to_dict(v)
    out["spectrum"] = spectrum_to_dict(s)
    return out


def verify_to_text(v: SpectralVerdict, s: Spectrum) -> str:
    lines = [f"spectral shape check ({v.shape.value}): {'passed' if v.passed else 'failed'}"]
    lines += [f"  violation: {msg}" for msg in v.violations]
    lines.append(spectrum_to_text(s))
    return "\n".join(lines)


def compound_to_dict(cm: CompoundMatrix) -> dict:
    return {
        "source_n": cm.source_n,
        "order": cm.order,
        "dimension": cm.dimension,
        "index_sets": [list(t) for t in cm.index_sets()],
        "matrix": matrix_payload(cm.matrix),
    }


def _matrix_to_text(m: np.ndarray) -> str:
    cells = [[_g(v) for v in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def compound_to_text(cm: CompoundMatrix) -> str:
    labels = ", ".join(_format_set(t) for t in cm.index_sets())
    header = (
        f"compound matrix of order {cm.order} "
        f"({cm.dimension}x{cm.dimension}, subsets {labels}):"
    )
    return header + "\n" + _matrix_to_text(cm.matrix)


def _order_to_dict(v: OrderVerdict) -> dict:
    return {
        "order": v.order,
        "dimension": v.dimension,
        "jss_primitive": v.jss_primitive,
        "strict": v.strict,
        "j_partition": partition_to_dict(v.j_partition),
    }


def classification_to_dict(report: ClassificationReport) -> dict:
    return {
        "n": report.n,
        "tau": report.tau,
        "spectral_tol": report.spectral_tol,
        "label": report.label.value,
        "note": NONE_LABEL_NOTE if report.label == Label.NONE else None,
        "per_order": [_order_to_dict(v) for v in report.per_order],
        "spectral": verdict_to_dict(report.spectral) if report.spectral else None,
        "eigenvalues": [_complex_to_dict(z) for z in report.spectrum.eigenvalues]
        if report.spectrum
        else None,
    }


def classification_to_text(report: ClassificationReport) -> str:
    lines = [f"dimension: {report.n}"]
    lines.append("order  dim  jss_primitive  strict  partition")
    for v in report.per_order:
        lines.append(
            f"{v.order:>5}  {v.dimension:>3}  "
            f"{'yes' if v.jss_primitive else 'no':>13}  "
            f"{'yes' if v.strict else 'no':>6}  {render_bipartition(v.j_partition)}"
        )
    lines.append(f"label: {report.label.value}")
    if report.label == Label.NONE:
        lines.append(f"note: {NONE_LABEL_NOTE}")
    if report.spectrum is not None:
        lines.append(spectrum_to_text(report.spectrum))
    if report.spectral is not None:
        shape = report.spectral.shape.value
        lines.append(
            f"spectral shape check ({shape}): {'passed' if report.spectral.passed else 'failed'}"
        )
        lines += [f"  violation: {msg}" for msg in report.spectral.violations]
    return "\n".join(lines)


def search_to_dict(n: int, label: Label, trials: int, seed: int, found) -> dict:
    return {
        "n": n,
        "label": label.value,
        "trials": trials,
        "seed": seed,
        "count": len(found),
        "found": [matrix_payload(m) for m in found],
    }


def search_to_text(n: int, label: Label, trials: int, seed: int, found) -> str:
    lines = [
        f"search: n={n} label={label.value} trials={trials} seed={seed}",
        f"found {len(found)} matrix(es)",
    ]
    for i, m in enumerate(found, 1):
        lines.append(f"-- match {i} --")
        lines.append(_matrix_to_text(np.asarray(m)))
    return "\n".join(lines)
