"""Eigensolver and spectrum clustering, cross-checked against numpy.

numpy.linalg.eigvalsh is the independent reference route; the package's own
solver never calls it.
"""

import math

import numpy as np
import pytest
from helpers import random_connected_graph

from lapexcess import (
    DistinctSpectrum,
    JacobiConvergenceError,
    SpectrumClusterError,
    cluster_spectrum,
    cycle_graph,
    eigenvalues_sym,
    idempotent,
    laplacian_matrix,
    petersen_graph,
    phi_products,
)


# ---------------------------------------------------------------------------
# Jacobi eigenvalues vs numpy
# ---------------------------------------------------------------------------

def test_random_symmetric_matches_eigvalsh():
    rng = np.random.default_rng(42)
    for _ in range(30):
        n = int(rng.integers(1, 13))
        m = rng.standard_normal((n, n))
        m = (m + m.T) / 2.0
        got = eigenvalues_sym(m)
        want = np.linalg.eigvalsh(m)
        scale = max(1.0, float(np.abs(want).max()))
        assert np.max(np.abs(got - want)) <= 1e-11 * scale


def test_laplacians_match_eigvalsh():
    rng = np.random.default_rng(7)
    for _ in range(10):
        g = random_connected_graph(rng, int(rng.integers(2, 20)), int(rng.integers(0, 8)))
        lap = laplacian_matrix(g)
        got = eigenvalues_sym(lap)
        want = np.linalg.eigvalsh(lap)
        assert np.max(np.abs(got - want)) <= 1e-10 * max(1.0, want[-1])


def test_diagonal_and_trivial_cases():
    assert np.array_equal(eigenvalues_sym(np.array([[5.0]])), [5.0])
    d = np.diag([3.0, -1.0, 2.0])
    assert np.array_equal(eigenvalues_sym(d), [-1.0, 2.0, 3.0])


def test_eigenvalues_sorted_and_deterministic():
    lap = laplacian_matrix(petersen_graph())
    a = eigenvalues_sym(lap)
    b = eigenvalues_sym(lap)
    assert np.array_equal(a, b)
    assert np.all(np.diff(a) >= 0)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eigenvalues_sym(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eigenvalues_sym(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_tolerates_rounding_level_asymmetry():
    m = np.array([[2.0, 1.0], [1.0 + 1e-15, 2.0]])
    got = eigenvalues_sym(m)
    assert np.allclose(got, [1.0, 3.0], atol=1e-12)


def test_sweep_budget_exhaustion_raises():
    m = np.ones((6, 6)) + np.eye(6)
    with pytest.raises(JacobiConvergenceError):
        eigenvalues_sym(m, max_sweeps=0)


# ---------------------------------------------------------------------------
# Clustering
# ---------------------------------------------------------------------------

def test_cluster_exact_multiplicities():
    # C4 Laplacian spectrum is 0, 2, 2, 4
    raw = eigenvalues_sym(laplacian_matrix(cycle_graph(4)))
    s = cluster_spectrum(raw)
    assert np.allclose(s.thetas, [0.0, 2.0, 4.0], atol=1e-12)
    assert list(s.mults) == [1, 2, 1]
    assert s.thetas[0] == 0.0
    assert s.d == 2
    assert s.n == 4


def test_cluster_merges_jittered_values():
    raw = np.array([1e-13, 1.0 - 3e-9, 1.0 + 3e-9, 2.5])
    s = cluster_spectrum(raw, tol=1e-8)
    assert list(s.mults) == [1, 2, 1]
    assert abs(s.thetas[1] - 1.0) <= 1e-8


def test_cluster_is_gap_chaining():
    # each consecutive gap is below tolerance, so the chain merges even
    # though the endpoints are farther apart than the tolerance
    raw = np.array([0.0, 1.0, 1.0 + 0.9e-8, 1.0 + 1.8e-8])
    s = cluster_spectrum(raw, tol=1e-8)
    assert list(s.mults) == [1, 3]


def test_cluster_rejections():
    with pytest.raises(SpectrumClusterError):
        cluster_spectrum(np.array([0.5, 1.0, 2.0]))  # no zero eigenvalue
    with pytest.raises(SpectrumClusterError):
        cluster_spectrum(np.array([0.0, 1e-12, 1.0]))  # zero repeated
    with pytest.raises(SpectrumClusterError):
        cluster_spectrum(np.array([-0.5, 1.0, 2.0]))
    with pytest.raises(ValueError):
        cluster_spectrum(np.array([1.0, 0.0]))  # unsorted
    with pytest.raises(ValueError):
        cluster_spectrum(np.array([]))
    with pytest.raises(ValueError):
        cluster_spectrum(np.array([0.0, 1.0]), tol=0.0)


def test_min_gap():
    s = cluster_spectrum(np.array([0.0, 0.4, 2.0]), tol=1e-10)
    assert math.isclose(s.min_gap, 0.4)
    assert DistinctSpectrum(np.array([0.0]), np.array([1])).min_gap == math.inf


# ---------------------------------------------------------------------------
# Gap products and idempotents
# ---------------------------------------------------------------------------

def test_phi_products_direct():
    s = DistinctSpectrum(np.array([0.0, 1.0, 3.0]), np.array([1, 2, 1]))
    # phi_0 = (0-1)(0-3) = 3, phi_1 = (1-0)(1-3) = -2, phi_2 = (3-0)(3-1) = 6
    assert np.allclose(phi_products(s), [3.0, -2.0, 6.0])


def test_phi_sign_alternation():
    rng = np.random.default_rng(11)
    for _ in range(8):
        g = random_connected_graph(rng, int(rng.integers(2, 12)), 2)
        raw = eigenvalues_sym(laplacian_matrix(g))
        s = cluster_spectrum(raw)
        phis = phi_products(s)
        for i, phi in enumerate(phis):
            assert (-1.0) ** (s.d - i) * phi > 0


def test_phi_single_eigenvalue():
    s = DistinctSpectrum(np.array([0.0]), np.array([1]))
    assert np.array_equal(phi_products(s), [1.0])


def test_idempotents_are_projectors():
    g = petersen_graph()
    lap = laplacian_matrix(g)
    s = cluster_spectrum(eigenvalues_sym(lap))
    n = g.n
    total = np.zeros((n, n))
    for i in range(s.d + 1):
        f = idempotent(lap, s, i)
        assert np.allclose(f @ f, f, atol=1e-10)
        assert np.allclose(lap @ f, s.thetas[i] * f, atol=1e-9)
        total += f
    assert np.allclose(total, np.eye(n), atol=1e-10)
    assert np.allclose(idempotent(lap, s, 0), np.full((n, n), 1.0 / n), atol=1e-10)


def test_idempotent_index_range():
    lap = laplacian_matrix(cycle_graph(4))
    s = cluster_spectrum(eigenvalues_sym(lap))
    with pytest.raises(IndexError):
        idempotent(lap, s, 3)
