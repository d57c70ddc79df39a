"""Exception types shared across the package."""


class OscimatError(Exception):
    """Base class for all domain errors raised by oscimat."""


class CapacityError(OscimatError):
    """Requested analysis exceeds the configured dimension guard."""


class ToleranceConflictError(OscimatError):
    """A sign-symmetry witness was found but the similarity image has a
    negative entry beyond tolerance; the zero tolerance is inconsistent
    with the data."""


class EigenSolverError(OscimatError):
    """The dense eigensolver failed to converge or returned a spectrum
    without conjugate closure."""


class DegenerateSpectrumError(OscimatError):
    """A spectral-radius ratio could not be formed because a denominator
    is numerically zero."""


class MatrixParseError(OscimatError):
    """Input file could not be parsed into a matrix."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class MatrixShapeError(OscimatError):
    """Parsed input is ragged or not square."""
