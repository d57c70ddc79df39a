"""HTTP analysis service wrapping the core package.

Every endpoint is stateless: POST a matrix, get a report.  Domain input
problems map to 400, numeric failures to 500; schema violations get
FastAPI's usual 422.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .classify import Label, classify, search_examples
from .errors import (
    CapacityError,
    DegenerateSpectrumError,
    EigenSolverError,
    MatrixParseError,
    MatrixShapeError,
    ToleranceConflictError,
)
from .matrices import compound
from .render import (
    classification_to_dict,
    compound_to_dict,
    search_to_dict,
    spectrum_to_dict,
    verify_to_dict,
)
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    CompoundRequest,
    CompoundResponse,
    HealthResponse,
    SearchRequest,
    SearchResponse,
    SpectrumPayload,
    SpectrumRequest,
    VerifyRequest,
    VerifyResponse,
)
from .spectra import SpectralShape, eigenvalues, verify_shape

_INPUT_ERRORS = (MatrixParseError, MatrixShapeError, CapacityError, ValueError)
_NUMERIC_ERRORS = (EigenSolverError, DegenerateSpectrumError, ToleranceConflictError)


def create_app() -> FastAPI:
    app = FastAPI(
        title="oscimat",
        version=__version__,
        description="Compound-matrix sign-structure classification of real square matrices.",
    )

    @app.exception_handler(Exception)
    async def _domain_errors(request: Request, exc: Exception):
        if isinstance(exc, _INPUT_ERRORS):
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        if isinstance(exc, _NUMERIC_ERRORS):
            return JSONResponse(status_code=500, content={"detail": f"numeric failure: {exc}"})
        raise exc

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.post("/compound", response_model=CompoundResponse)
    def compound_endpoint(req: CompoundRequest):
        cm = compound(req.matrix.to_array(), req.order)
        return CompoundResponse(**compound_to_dict(cm))

    @app.post("/classify", response_model=ClassifyResponse)
    def classify_endpoint(req: ClassifyRequest):
        report = classify(
            req.matrix.to_array(),
            tau=req.tau,
            spectral_tol=req.spectral_tol,
            max_dimension=req.max_dimension,
        )
        return ClassifyResponse(**classification_to_dict(report))

    @app.post("/spectrum", response_model=SpectrumPayload)
    def spectrum_endpoint(req: SpectrumRequest):
        s = eigenvalues(req.matrix.to_array(), req.spectral_tol)
        return SpectrumPayload(**spectrum_to_dict(s))

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(req: VerifyRequest):
        s = eigenvalues(req.matrix.to_array(), req.spectral_tol)
        v = verify_shape(s, SpectralShape[req.shape], req.spectral_tol)
        return VerifyResponse(**verify_to_dict(v, s))

    @app.post("/search", response_model=SearchResponse)
    def search_endpoint(req: SearchRequest):
        label = Label[req.label]
        found = search_examples(
            req.n, label, req.trials, req.seed, tau=req.tau, spectral_tol=req.spectral_tol
        )
        return SearchResponse(**search_to_dict(req.n, label, req.trials, req.seed, found))

    return app


app = create_app()
