"""Pydantic request/response models for the HTTP service.

Response models mirror the dicts built in `render`, so the service and the
CLI JSON output stay field-for-field identical.
"""
from __future__ import annotations

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, model_validator

from .classify import DEFAULT_MAX_DIMENSION


class MatrixPayload(BaseModel):
    n: int = Field(ge=1)
    rows: list[list[float]]

    @model_validator(mode="after")
    def _check_square(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != self.n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.n}")
            if not all(math.isfinite(v) for v in row):
                raise ValueError(f"row {i} contains a non-finite entry")
        return self

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.float64)


class ComplexValue(BaseModel):
    re: float
    im: float


class PartitionPayload(BaseModel):
    members: list[int]
    complement: list[int]
    diag_signs: list[int]


class SpectrumPayload(BaseModel):
    n: int
    eigenvalues: list[ComplexValue]
    multiplicity_tol: float


class SpectralVerdictPayload(BaseModel):
    shape: str
    passed: bool
    violations: list[str]


class OrderVerdictPayload(BaseModel):
    order: int
    dimension: int
    jss_primitive: bool
    strict: bool
    j_partition: PartitionPayload | None


class CompoundRequest(BaseModel):
    matrix: MatrixPayload
    order: int = Field(ge=1)


class CompoundResponse(BaseModel):
    source_n: int
    order: int
    dimension: int
    index_sets: list[list[int]]
    matrix: MatrixPayload


class ClassifyRequest(BaseModel):
    matrix: MatrixPayload
    tau: float = Field(default=1e-9, ge=0)
    spectral_tol: float = Field(default=1e-6, ge=0)
    max_dimension: int = Field(default=DEFAULT_MAX_DIMENSION, ge=2)


class ClassifyResponse(BaseModel):
    n: int
    tau: float
    spectral_tol: float
    label: str
    note: str | None
    per_order: list[OrderVerdictPayload]
    spectral: SpectralVerdictPayload | None
    eigenvalues: list[ComplexValue] | None


class SpectrumRequest(BaseModel):
    matrix: MatrixPayload
    spectral_tol: float = Field(default=1e-6, ge=0)


class VerifyRequest(BaseModel):
    matrix: MatrixPayload
    shape: Literal["GO", "GEO", "GOO"]
    spectral_tol: float = Field(default=1e-6, ge=0)


class VerifyResponse(BaseModel):
    shape: str
    passed: bool
    violations: list[str]
    spectrum: SpectrumPayload


class SearchRequest(BaseModel):
    n: int = Field(ge=2)
    label: Literal["GO", "GEO", "GOO", "GEO_AND_GOO", "NONE"]
    trials: int = Field(default=1000, ge=1)
    seed: int = 0
    tau: float = Field(default=1e-9, ge=0)
    spectral_tol: float = Field(default=1e-6, ge=0)


class SearchResponse(BaseModel):
    n: int
    label: str
    trials: int
    seed: int
    count: int
    found: list[MatrixPayload]


class HealthResponse(BaseModel):
    status: str
    version: str
