"""Command-line frontend.

The CLI is a thin client over the same analysis handlers the HTTP service
uses: it parses files, dispatches one command, and prints the report to
stdout (diagnostics go to stderr).  Exit codes: 0 analysis done (whatever
the label), 2 input error, 3 numeric failure.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from . import __version__
from .classify import DEFAULT_MAX_DIMENSION, Label, classify, search_examples
from .errors import (
    CapacityError,
    DegenerateSpectrumError,
    EigenSolverError,
    MatrixParseError,
    MatrixShapeError,
    ToleranceConflictError,
)
from .matrices import compound
from .matrixio import parse_matrix
from .render import (
    classification_to_dict,
    classification_to_text,
    compound_to_dict,
    compound_to_text,
    search_to_dict,
    search_to_text,
    spectrum_to_dict,
    spectrum_to_text,
    verify_to_dict,
    verify_to_text,
)
from .spectra import SpectralShape, eigenvalues, verify_shape

__all__ = ["RunConfig", "main", "run"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3

_INPUT_ERRORS = (MatrixParseError, MatrixShapeError, CapacityError, ValueError)
_NUMERIC_ERRORS = (
    EigenSolverError,
    DegenerateSpectrumError,
    ToleranceConflictError,
    np.linalg.LinAlgError,
)


@dataclass
class RunConfig:
    """One CLI invocation; defaults mirror the documented flag defaults."""

    command: str
    input_path: str | Path | None = None
    output_format: str = "text"
    tau: float = 1e-9
    spectral_tol: float = 1e-6
    order: int | None = None  # compound
    shape: str | None = None  # verify
    label: str | None = None  # search
    n: int | None = None  # search
    trials: int = 1000  # search
    seed: int = 0  # search
    max_dimension: int = DEFAULT_MAX_DIMENSION  # classify


def _dispatch(cfg: RunConfig, err) -> dict | str:
    as_json = cfg.output_format == "json"
    if cfg.command == "compound":
        a = parse_matrix(cfg.input_path)
        if cfg.order is None:
            raise ValueError("compound needs an order (-j)")
        cm = compound(a, cfg.order)
        return compound_to_dict(cm) if as_json else compound_to_text(cm)
    if cfg.command == "classify":
        a = parse_matrix(cfg.input_path)
        if cfg.max_dimension > DEFAULT_MAX_DIMENSION and a.shape[0] > DEFAULT_MAX_DIMENSION:
            print(
                f"warning: dimension {a.shape[0]} beyond the default guard "
                f"{DEFAULT_MAX_DIMENSION}; compound analyses may be slow",
                file=err,
            )
        report = classify(
            a, tau=cfg.tau, spectral_tol=cfg.spectral_tol, max_dimension=cfg.max_dimension
        )
        return classification_to_dict(report) if as_json else classification_to_text(report)
    if cfg.command == "spectrum":
        a = parse_matrix(cfg.input_path)
        s = eigenvalues(a, cfg.spectral_tol)
        return spectrum_to_dict(s) if as_json else spectrum_to_text(s)
    if cfg.command == "verify":
        a = parse_matrix(cfg.input_path)
        if cfg.shape is None:
            raise ValueError("verify needs a --shape (GO, GEO or GOO)")
        shape = SpectralShape[cfg.shape]
        s = eigenvalues(a, cfg.spectral_tol)
        v = verify_shape(s, shape, cfg.spectral_tol)
        return verify_to_dict(v, s) if as_json else verify_to_text(v, s)
    if cfg.command == "search":
        if cfg.n is None or cfg.label is None:
            raise ValueError("search needs -n and --label")
        label = Label[cfg.label]
        found = search_examples(
            cfg.n, label, cfg.trials, cfg.seed, tau=cfg.tau, spectral_tol=cfg.spectral_tol
        )
        if as_json:
            return search_to_dict(cfg.n, label, cfg.trials, cfg.seed, found)
        return search_to_text(cfg.n, label, cfg.trials, cfg.seed, found)
    raise ValueError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one configured command, writing the report to `out`."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        report = _dispatch(cfg, err)
    except KeyError as exc:
        print(f"error: unknown choice {exc}", file=err)
        return EXIT_INPUT
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except _NUMERIC_ERRORS as exc:
        print(f"numeric failure: {exc}", file=err)
        return EXIT_NUMERIC
    if isinstance(report, dict):
        print(json.dumps(report, indent=2), file=out)
    else:
        print(report, file=out)
    return EXIT_OK


_format_option = click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Report format.",
)
_tau_option = click.option(
    "--tau", type=float, default=1e-9, show_default=True, help="Relative zero tolerance for signs."
)
_spectral_tol_option = click.option(
    "--spectral-tol",
    type=float,
    default=1e-6,
    show_default=True,
    help="Tolerance for spectral predicates.",
)


@click.group()
@click.version_option(version=__version__, prog_name="oscimat")
def main():
    """Classify real square matrices by the sign structure and primitivity
    of their compound matrices, and check the predicted spectral shape."""


@main.command("compound")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("-j", "--order", type=int, required=True, help="Compound order (1..n).")
@_format_option
def compound_cmd(input_path, order, output_format):
    """Print the order-j compound matrix of the input."""
    cfg = RunConfig(command="compound", input_path=input_path, order=order, output_format=output_format)
    sys.exit(run(cfg))


@main.command("classify")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_tau_option
@_spectral_tol_option
@click.option(
    "--max-n",
    "max_dimension",
    type=int,
    default=DEFAULT_MAX_DIMENSION,
    show_default=True,
    help="Dimension guard; raise to analyze larger matrices.",
)
def classify_cmd(input_path, output_format, tau, spectral_tol, max_dimension):
    """Classify the matrix over all compound orders."""
    cfg = RunConfig(
        command="classify",
        input_path=input_path,
        output_format=output_format,
        tau=tau,
        spectral_tol=spectral_tol,
        max_dimension=max_dimension,
    )
    sys.exit(run(cfg))


@main.command("spectrum")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_spectral_tol_option
def spectrum_cmd(input_path, output_format, spectral_tol):
    """Print all eigenvalues in deterministic order."""
    cfg = RunConfig(
        command="spectrum", input_path=input_path, output_format=output_format, spectral_tol=spectral_tol
    )
    sys.exit(run(cfg))


@main.command("verify")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--shape", type=click.Choice(["GO", "GEO", "GOO"]), required=True)
@_format_option
@_spectral_tol_option
def verify_cmd(input_path, shape, output_format, spectral_tol):
    """Check the computed spectrum against one spectral shape."""
    cfg = RunConfig(
        command="verify",
        input_path=input_path,
        shape=shape,
        output_format=output_format,
        spectral_tol=spectral_tol,
    )
    sys.exit(run(cfg))


@main.command("search")
@click.option("-n", "n", type=int, required=True, help="Matrix dimension to sample.")
@click.option("--label", type=click.Choice([l.name for l in Label]), required=True)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option
@_tau_option
@_spectral_tol_option
def search_cmd(n, label, trials, seed, output_format, tau, spectral_tol):
    """Sample random one-decimal matrices and keep those matching a label."""
    cfg = RunConfig(
        command="search",
        n=n,
        label=label,
        trials=trials,
        seed=seed,
        output_format=output_format,
        tau=tau,
        spectral_tol=spectral_tol,
    )
    sys.exit(run(cfg))


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP analysis service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
