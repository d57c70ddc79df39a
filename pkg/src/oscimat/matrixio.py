"""Matrix ingestion from CSV and JSON files, and JSON-ready serialization."""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import MatrixParseError, MatrixShapeError
from .matrices import as_square_matrix

__all__ = ["matrix_payload", "parse_matrix", "parse_matrix_text"]


def parse_matrix(path) -> np.ndarray:
    """Load a square matrix from a CSV or JSON file.

    CSV: one row per line, comma-separated decimals.
    JSON: an object {"n": int, "rows": [[...], ...]}.
    The format is sniffed from the first non-whitespace character.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise MatrixParseError(f"cannot read {p}: {exc}") from exc
    return parse_matrix_text(text)


def parse_matrix_text(text: str) -> np.ndarray:
    stripped = text.lstrip()
    if not stripped:
        raise MatrixParseError("input is empty", line=1)
    if stripped[0] == "{":
        return _parse_json(text)
    return _parse_csv(text)


def _parse_csv(text: str) -> np.ndarray:
    rows: list[list[float]] = []
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            raise MatrixParseError("blank row inside matrix", line=lineno)
        row = []
        for colno, token in enumerate(line.split(","), start=1):
            try:
                value = float(token)
            except ValueError:
                raise MatrixParseError(
                    f"cannot parse {token.strip()!r} as a number", line=lineno, column=colno
                ) from None
            if not math.isfinite(value):
                raise MatrixParseError("matrix entries must be finite", line=lineno, column=colno)
            row.append(value)
        rows.append(row)
    return _validate_rows(rows)


def _parse_json(text: str) -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict) or "n" not in data or "rows" not in data:
        raise MatrixParseError('JSON matrix must be an object with keys "n" and "rows"')
    n = data["n"]
    rows = data["rows"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixParseError('"n" must be a positive integer')
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MatrixParseError('"rows" must be a list of lists of numbers')
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=1):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise MatrixParseError(f"row {i}, entry {j} is not a number")
            if not math.isfinite(v):
                raise MatrixParseError(f"row {i}, entry {j} must be finite")
    if len(rows) != n:
        raise MatrixShapeError(f'expected {n} rows per "n", got {len(rows)}')
    return _validate_rows([[float(v) for v in row] for row in rows])


def _validate_rows(rows: list[list[float]]) -> np.ndarray:
    n = len(rows)
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise MatrixShapeError(
                f"matrix is not square: {n} rows but row {i} has {len(row)} entries"
            )
    return as_square_matrix(np.array(rows, dtype=np.float64))


def matrix_payload(a) -> dict:
    """JSON-ready {"n", "rows"} form; floats keep shortest round-trip repr."""
    m = as_square_matrix(a)
    return {"n": int(m.shape[0]), "rows": [[float(v) for v in row] for row in m]}
