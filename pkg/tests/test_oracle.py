import numpy as np
import pytest

from ctqw import build_graph, stratify
from ctqw.errors import InvalidParams, NotSymmetric
from ctqw.oracle import (
    aggregate_to_strata,
    eigendecompose_symmetric,
    graph_eigendecomposition,
    oracle_amplitudes,
)


class TestEigendecomposition:
    def test_k2(self):
        dec = eigendecompose_symmetric(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(dec.eigenvalues, (-1.0, 1.0), atol=1e-14)

    def test_petersen_spectrum(self, petersen):
        dec = graph_eigendecomposition(petersen)
        vals = np.round(dec.eigenvalues, 9)
        assert np.allclose(sorted(set(vals)), (-2.0, 1.0, 3.0))
        assert (vals == -2.0).sum() == 4
        assert (vals == 1.0).sum() == 5
        assert (vals == 3.0).sum() == 1

    def test_c4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        dec = eigendecompose_symmetric(g.adjacency_float())
        assert np.allclose(dec.eigenvalues, (-2.0, 0.0, 0.0, 2.0), atol=1e-12)

    def test_residual_and_orthogonality(self, rng):
        for _ in range(5):
            n = int(rng.integers(3, 40))
            a = rng.standard_normal((n, n))
            a = a + a.T
            dec = eigendecompose_symmetric(a)
            v, lam = dec.eigenvectors, dec.eigenvalues
            residual = np.abs(a @ v - v * lam[None, :]).max()
            assert residual < 1e-9 * max(1.0, np.abs(a).max())
            assert np.abs(v.T @ v - np.eye(n)).max() < 1e-10
            assert (np.diff(lam) >= -1e-12).all()

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            eigendecompose_symmetric(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_not_square(self):
        with pytest.raises(InvalidParams):
            eigendecompose_symmetric(np.zeros((2, 3)))

    def test_decomposition_cached_per_graph(self, petersen):
        assert graph_eigendecomposition(petersen) is graph_eigendecomposition(petersen)


class TestOracleAmplitudes:
    def test_k2_closed_form(self, rng):
        g = build_graph(2, [(0, 1)])
        for t in rng.uniform(0, 10, size=8):
            p = oracle_amplitudes(g, 0, float(t))
            assert p[0] == pytest.approx(np.cos(t), abs=1e-12)
            assert p[1] == pytest.approx(-1j * np.sin(t), abs=1e-12)

    def test_time_zero_is_indicator(self, petersen):
        p = oracle_amplitudes(petersen, 3, 0.0)
        want = np.zeros(10, dtype=complex)
        want[3] = 1.0
        assert np.abs(p - want).max() < 1e-12

    def test_unitarity(self, petersen, rng):
        for t in rng.uniform(0, 30, size=10):
            p = oracle_amplitudes(petersen, 0, float(t))
            assert (np.abs(p) ** 2).sum() == pytest.approx(1.0, abs=1e-10)

    def test_petersen_matches_closed_forms(self, petersen, petersen_strat):
        t = np.linspace(0.0, 10.0, 41)
        pvec = oracle_amplitudes(petersen, 0, t)
        values, spread = aggregate_to_strata(pvec, petersen_strat)
        q0 = 0.1 * (5 * np.exp(-1j * t) + 4 * np.exp(2j * t) + np.exp(-3j * t))
        q1 = (0.5 * np.exp(-1j * t) - 0.8 * np.exp(2j * t) + 0.3 * np.exp(-3j * t)) / np.sqrt(3)
        q2 = (-np.exp(-1j * t) + 0.4 * np.exp(2j * t) + 0.6 * np.exp(-3j * t)) / np.sqrt(6)
        assert np.abs(values[0] - q0).max() < 1e-12
        assert np.abs(values[1] - q1).max() < 1e-12
        assert np.abs(values[2] - q2).max() < 1e-12
        assert spread < 1e-12

    def test_origin_out_of_range(self, petersen):
        with pytest.raises(InvalidParams):
            oracle_amplitudes(petersen, 10, 0.0)


class TestAggregate:
    def test_k2(self):
        g = build_graph(2, [(0, 1)])
        strat = stratify(g, 0)
        t = 1.1
        values, spread = aggregate_to_strata(oracle_amplitudes(g, 0, t), strat)
        assert values[0] == pytest.approx(np.cos(t), abs=1e-12)
        assert values[1] == pytest.approx(-1j * np.sin(t), abs=1e-12)
        assert spread == 0.0

    def test_time_zero(self, petersen, petersen_strat):
        values, _ = aggregate_to_strata(oracle_amplitudes(petersen, 0, 0.0), petersen_strat)
        assert values[0] == pytest.approx(1.0, abs=1e-12)
        assert np.abs(values[1:]).max() < 1e-12

    def test_non_qd_spread_reported_not_asserted(self):
        # path entered away from the endpoint: amplitudes differ inside shells
        g = build_graph(5, [(i, i + 1) for i in range(4)])
        strat = stratify(g, 1)
        values, spread = aggregate_to_strata(oracle_amplitudes(g, 1, 2.0), strat)
        assert spread > 1e-3  # genuinely unequal, and reported as such

    def test_array_and_scalar_shapes(self, petersen, petersen_strat):
        t = np.linspace(0, 2, 5)
        mat, _ = aggregate_to_strata(oracle_amplitudes(petersen, 0, t), petersen_strat)
        assert mat.shape == (3, 5)
        vec, _ = aggregate_to_strata(oracle_amplitudes(petersen, 0, 2.0), petersen_strat)
        assert vec.shape == (3,)
        assert np.abs(vec - mat[:, -1]).max() < 1e-12
