"""Shared fixtures: three hand-checked reference matrices.

The expected minors, determinants and eigenvalues below were worked out
independently of this library (cofactor arithmetic for the minors, a separate
eigensolver run cross-checked against characteristic-polynomial residuals for
the spectra) and are frozen here to the recorded precision.  Tests compare
against these constants rather than re-deriving them with the code under
test.
"""

from __future__ import annotations

import numpy as np
import pytest

# 3 x 3 matrix whose minor matrices of every order admit a strict sign split;
# classification: GO.  Spectrum is real, positive, strictly separated.
REF_GO_3 = np.array([
    [4.0, -6.8, 4.4],
    [-1.2, 6.3, -1.1],
    [1.8, -2.6, 3.4],
])

# Its order-2 minor matrix, entry by entry (rows/cols in lexicographic
# subset order {1,2}, {1,3}, {2,3}).
REF_GO_3_ORDER2 = np.array([
    [17.04, 0.88, -20.24],
    [1.84, 5.68, -11.68],
    [-8.22, -2.10, 18.56],
])

REF_GO_3_DET = 23.792
REF_GO_3_EIGS = [9.69542, 3.24937, 0.755205]

# 4 x 4 matrix whose even-order minor matrices pass the sign-split +
# primitivity test while order 1 fails; classification: GEO.  Spectrum is
# two conjugate pairs.
REF_GEO_4 = np.array([
    [7.0, 5.2, 7.8, 18.6],
    [-6.9, 4.4, 5.3, 37.5],
    [2.1, 4.0, 5.6, 20.8],
    [-9.0, 1.8, -2.4, 17.4],
])

REF_GEO_4_ORDER2 = np.array([
    [66.68, 90.92, 390.84, -6.76, 113.16, 193.92],
    [17.08, 22.82, 106.54, -2.08, 33.76, 58.08],
    [59.40, 53.40, 289.20, -26.52, 57.00, 180.36],
    [-36.84, -49.77, -222.27, 3.44, -58.48, -99.76],
    [27.18, 64.26, 217.44, -20.10, 9.06, 182.22],
    [39.78, 45.36, 223.74, -19.68, 32.16, 147.36],
])

REF_GEO_4_DET = 278.964
REF_GEO_4_EIGS = [
    17.813 + 16.2621j,
    17.813 - 16.2621j,
    -0.613045 + 0.322013j,
    -0.613045 - 0.322013j,
]

# 4 x 4 matrix whose odd-order minor matrices pass while order 2 fails;
# classification: GOO.  Spectrum: dominant positive real eigenvalue, one
# conjugate pair, one small real eigenvalue.
REF_GOO_4 = np.array([
    [1.0, 8.0, 3.0, 0.4],
    [5.7, 7.4, 8.7, 9.5],
    [1.5, 9.7, 2.5, 6.0],
    [4.0, 8.6, 9.9, 2.2],
])

REF_GOO_4_ORDER3 = np.array([
    [57.08, -189.674, -30.92, 344.494],
    [-116.34, 146.028, 10.122, -403.644],
    [-41.97, 124.98, 10.14, -310.608],
    [163.601, -265.352, -81.065, 572.437],
])

REF_GOO_4_EIGS = [
    23.8704,
    -5.58952 + 2.36837j,
    -5.58952 - 2.36837j,
    0.408632,
]


@pytest.fixture
def ref_go():
    return REF_GO_3.copy()


@pytest.fixture
def ref_geo():
    return REF_GEO_4.copy()


@pytest.fixture
def ref_goo():
    return REF_GOO_4.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
