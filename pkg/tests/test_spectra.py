"""Eigenvalue extraction, product multisets, and the spectral shape tests."""

from __future__ import annotations

import cmath

import numpy as np
import pytest
from scipy.linalg import block_diag

from helpers import assert_multisets_close
from conftest import REF_GO_3_EIGS, REF_GEO_4_EIGS, REF_GOO_4_EIGS

from oscimat import (
    DegenerateSpectrumError,
    EigenSolverError,
    SpectralShape,
    Spectrum,
    SpectralVerdict,
    compound,
    eigenvalues,
    kronecker_products,
    ratio_chain,
    spectral_sort_key,
    verify_geo,
    verify_go,
    verify_goo,
    verify_shape,
)


def spectrum_of(values, tol=1e-6) -> Spectrum:
    vals = sorted((complex(z) for z in values), key=spectral_sort_key)
    return Spectrum(eigenvalues=tuple(vals), multiplicity_tol=tol)


# ---------------------------------------------------------------------------
# eigenvalues and ordering

def test_eigenvalues_reference_go(ref_go):
    s = eigenvalues(ref_go)
    assert s.n == 3
    for got, want in zip(s.eigenvalues, REF_GO_3_EIGS):
        assert abs(got - want) <= 1e-3 * abs(want)


def test_eigenvalues_reference_goo(ref_goo):
    s = eigenvalues(ref_goo)
    want = sorted((complex(z) for z in REF_GOO_4_EIGS), key=spectral_sort_key)
    for got, exp in zip(s.eigenvalues, want):
        assert abs(got - exp) <= 1e-3 * abs(exp)


def test_eigenvalues_diagonal():
    s = eigenvalues(np.diag([3.0, 2.0, 1.0]))
    assert s.eigenvalues == (3 + 0j, 2 + 0j, 1 + 0j)
    assert s.spectral_radius() == 3.0
    assert s.moduli() == (3.0, 2.0, 1.0)


def test_eigenvalue_sort_order():
    # eigenvalues {3, 2i, -2i, -2, 1}: the modulus-2 level sorts by
    # |argument| ascending with the positive argument first
    m = block_diag([[3.0]], [[0.0, -4.0], [1.0, 0.0]], [[-2.0]], [[1.0]])
    s = eigenvalues(m)
    want = [3 + 0j, 2j, -2j, -2 + 0j, 1 + 0j]
    for got, exp in zip(s.eigenvalues, want):
        assert abs(got - exp) <= 1e-9 * (1 + abs(exp))


def test_spectral_sort_key_is_total():
    vals = [1 + 0j, -2 + 0j, 2j, -2j, 3 + 0j, 2 + 0j]
    ordered = sorted(vals, key=spectral_sort_key)
    assert ordered == [3 + 0j, 2 + 0j, 2j, -2j, -2 + 0j, 1 + 0j]


def test_eigenvalues_conjugate_closure(rng):
    for _ in range(40):
        n = int(rng.integers(2, 7))
        s = eigenvalues(rng.standard_normal((n, n)))
        nonreal = [z for z in s.eigenvalues if z.imag != 0]
        assert len(nonreal) % 2 == 0
        tol = 1e-9 * (1 + s.spectral_radius())
        key = lambda z: (z.real, z.imag)
        ups = sorted((z for z in nonreal if z.imag > 0), key=key)
        downs = sorted((z.conjugate() for z in nonreal if z.imag < 0), key=key)
        assert len(ups) == len(downs)
        for u, d in zip(ups, downs):
            assert abs(u - d) <= tol


def test_eigenvalues_solver_failure_maps_to_domain_error(monkeypatch):
    def boom(_):
        raise np.linalg.LinAlgError("did not converge")

    monkeypatch.setattr(np.linalg, "eigvals", boom)
    with pytest.raises(EigenSolverError):
        eigenvalues(np.eye(2))


def test_trace_and_det_match_spectrum(rng):
    for _ in range(30):
        n = int(rng.integers(2, 7))
        m = rng.standard_normal((n, n))
        s = eigenvalues(m)
        norm = np.linalg.norm(m)
        assert abs(sum(s.eigenvalues) - np.trace(m)) <= 1e-8 * max(norm, 1.0)
        prod = np.prod(np.array(s.eigenvalues))
        det = np.linalg.det(m)
        assert abs(prod - det) <= 1e-6 * max(abs(det), abs(prod), 1e-12)


# ---------------------------------------------------------------------------
# kronecker_products

def test_kronecker_products_diagonal():
    s = spectrum_of([3, 2, 1])
    assert kronecker_products(s, 1) == (3 + 0j, 2 + 0j, 1 + 0j)
    assert kronecker_products(s, 2) == (6 + 0j, 3 + 0j, 2 + 0j)
    assert kronecker_products(s, 3) == (6 + 0j,)


def test_kronecker_products_order_bounds():
    s = spectrum_of([3, 2, 1])
    for j in (0, 4):
        with pytest.raises(ValueError):
            kronecker_products(s, j)


def test_kronecker_matches_compound_spectrum(rng):
    for _ in range(15):
        n = int(rng.integers(2, 6))
        m = rng.standard_normal((n, n))
        s = eigenvalues(m)
        for j in range(1, n + 1):
            predicted = kronecker_products(s, j)
            computed = eigenvalues(compound(m, j).matrix).eigenvalues
            assert_multisets_close(predicted, computed, rtol=1e-5)


# ---------------------------------------------------------------------------
# shape verdicts

def test_verify_go_reference(ref_go):
    v = verify_go(eigenvalues(ref_go))
    assert isinstance(v, SpectralVerdict)
    assert v.shape is SpectralShape.GO
    assert v.passed and v.violations == ()


def test_verify_go_rejects_multiplicity():
    v = verify_go(spectrum_of([3, 3, 1]))
    assert not v.passed
    assert v.violations


def test_verify_go_rejects_negative():
    v = verify_go(spectrum_of([3, -2, 1]))
    assert not v.passed


def test_verify_go_rejects_complex():
    v = verify_go(spectrum_of([3, 1j, -1j]))
    assert not v.passed


def test_verify_geo_reference(ref_geo):
    v = verify_geo(eigenvalues(ref_geo))
    assert v.shape is SpectralShape.GEO
    assert v.passed, v.violations


def test_verify_geo_frozen_values():
    v = verify_geo(spectrum_of(REF_GEO_4_EIGS))
    assert v.passed, v.violations


def test_verify_geo_rejects_non_opposite_pair():
    v = verify_geo(spectrum_of([2j, 2j, 1]))
    assert not v.passed


def test_verify_geo_rejects_triple_level():
    v = verify_geo(spectrum_of([3, 3, 3]))
    assert not v.passed


def test_verify_geo_accepts_real_pairs():
    # same-sign real pair on one level, strict drop, then a single real:
    # pair arguments 0/0 are opposite within tolerance
    v = verify_geo(spectrum_of([3, 3, 1]))
    assert v.passed, v.violations


def test_verify_geo_odd_dimension_tail_real():
    v = verify_geo(spectrum_of([2 + 1j, 2 - 1j, 0.5j]))
    assert not v.passed
    v2 = verify_geo(spectrum_of([2 + 1j, 2 - 1j, 0.5]))
    assert v2.passed, v2.violations


def test_verify_goo_reference(ref_goo):
    v = verify_goo(eigenvalues(ref_goo))
    assert v.shape is SpectralShape.GOO
    assert v.passed, v.violations


def test_verify_goo_frozen_values():
    v = verify_goo(spectrum_of(REF_GOO_4_EIGS))
    assert v.passed, v.violations


def test_verify_goo_rejects_nonpositive_leader():
    v = verify_goo(spectrum_of([-3, 1, 1]))
    assert not v.passed


def test_verify_goo_rejects_nondominant_leader():
    v = verify_goo(spectrum_of([3, 3, 1]))
    assert not v.passed


def test_verify_goo_even_dimension_tail_real():
    v = verify_goo(spectrum_of([3, 2, 2, -1 + 0.1j]))
    assert not v.passed


def test_verify_goo_accepts_conjugate_middle():
    v = verify_goo(spectrum_of([3, 1 + 1j, 1 - 1j, 0.2]))
    assert v.passed, v.violations


def test_verify_shape_dispatch(ref_go):
    s = eigenvalues(ref_go)
    assert verify_shape(s, SpectralShape.GO).passed
    assert not verify_shape(s, SpectralShape.GEO, tol=1e-6).passed is None


def test_verdict_passed_iff_no_violations():
    with pytest.raises(ValueError):
        SpectralVerdict(shape=SpectralShape.GO, passed=True, violations=("x",))


# ---------------------------------------------------------------------------
# ratio_chain

def test_ratio_chain_reference(ref_go):
    chain = ratio_chain(ref_go)
    assert len(chain) == 3
    for got, want in zip(chain, REF_GO_3_EIGS):
        assert abs(got - want) <= 1e-3 * want


def test_ratio_chain_diagonal():
    assert ratio_chain(np.diag([3.0, 2.0, 1.0])) == pytest.approx([3, 2, 1], rel=1e-12)
    assert ratio_chain(np.eye(3)) == pytest.approx([1, 1, 1], rel=1e-12)


def test_ratio_chain_matches_go_spectrum(rng):
    # similarity transform of a positive distinct diagonal has GO shape;
    # the ratio chain must reproduce the eigenvalues in sorted order
    for _ in range(10):
        n = int(rng.integers(2, 6))
        d = np.sort(rng.uniform(0.5, 5.0, n))[::-1]
        d *= np.cumprod(np.full(n, 0.7))  # force clear modulus separation
        basis = np.eye(n) + 0.1 * rng.standard_normal((n, n))
        m = basis @ np.diag(np.sort(d)[::-1]) @ np.linalg.inv(basis)
        s = eigenvalues(m)
        if not verify_go(s).passed:
            continue
        chain = ratio_chain(m)
        for got, want in zip(chain, s.eigenvalues):
            assert abs(got - want.real) <= 1e-5 * abs(want)


def test_ratio_chain_degenerate_rank_one():
    m = np.outer([1.0, 2.0, 3.0], [1.0, 1.0, 1.0])
    with pytest.raises(DegenerateSpectrumError):
        ratio_chain(m)


def test_ratio_chain_zero_matrix():
    with pytest.raises(DegenerateSpectrumError):
        ratio_chain(np.zeros((3, 3)))
