"""oscimat: compound-matrix sign-structure analysis of real square matrices.

The package decides, order by order, whether the compound matrices of a
real square matrix are sign-symmetric primitive (diagonally +/-1-similar
to a primitive nonnegative matrix) and derives a classification label from
which orders pass: all (GO), the even ones (GEO), or the odd ones (GOO).
Each label predicts a spectral shape, which the spectra module checks
independently from the computed eigenvalues.
"""

__version__ = "0.1.0"

from .classify import (
    NONE_LABEL_NOTE,
    ClassificationReport,
    DEFAULT_MAX_DIMENSION,
    Label,
    OrderVerdict,
    classify,
    search_examples,
)
from .errors import (
    CapacityError,
    DegenerateSpectrumError,
    EigenSolverError,
    MatrixParseError,
    MatrixShapeError,
    OscimatError,
    ToleranceConflictError,
)
from .matrices import (
    CombIndex,
    CompoundMatrix,
    as_square_matrix,
    compound,
    lex_subsets,
    minor,
    rank_subset,
    unrank_subset,
)
from .matrixio import matrix_payload, parse_matrix, parse_matrix_text
from .primitivity import (
    JssVerdict,
    bool_pattern,
    bool_pow_reaches_all,
    is_jss_primitive,
    is_primitive,
    wielandt_exponent,
)
from .signstruct import (
    JPartition,
    NEG,
    POS,
    SignPattern,
    ZERO,
    apply_diag_similarity,
    find_j,
    find_j_strict,
    sign_pattern,
)
from .spectra import (
    SpectralShape,
    spectral_sort_key,
    SpectralVerdict,
    Spectrum,
    eigenvalues,
    kronecker_products,
    ratio_chain,
    verify_geo,
    verify_go,
    verify_goo,
    verify_shape,
)

__all__ = [
    "CapacityError",
    "ClassificationReport",
    "CombIndex",
    "CompoundMatrix",
    "DEFAULT_MAX_DIMENSION",
    "DegenerateSpectrumError",
    "EigenSolverError",
    "JPartition",
    "JssVerdict",
    "Label",
    "NONE_LABEL_NOTE",
    "MatrixParseError",
    "MatrixShapeError",
    "NEG",
    "OrderVerdict",
    "OscimatError",
    "POS",
    "SignPattern",
    "SpectralShape",
    "SpectralVerdict",
    "Spectrum",
    "ToleranceConflictError",
    "ZERO",
    "apply_diag_similarity",
    "as_square_matrix",
    "bool_pattern",
    "bool_pow_reaches_all",
    "classify",
    "compound",
    "eigenvalues",
    "find_j",
    "find_j_strict",
    "is_jss_primitive",
    "is_primitive",
    "kronecker_products",
    "lex_subsets",
    "matrix_payload",
    "minor",
    "parse_matrix",
    "parse_matrix_text",
    "rank_subset",
    "ratio_chain",
    "spectral_sort_key",
    "search_examples",
    "sign_pattern",
    "unrank_subset",
    "verify_geo",
    "verify_go",
    "verify_goo",
    "verify_shape",
    "wielandt_exponent",
]
