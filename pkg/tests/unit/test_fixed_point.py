"""Tests for the Picard iteration of the Duhamel map."""

import numpy as np
import pytest

from heatedstring.analysis.config import InitialSpec
from heatedstring.analysis.presets import initial_state
from heatedstring.exceptions import DivergenceError, DomainError
from heatedstring.projections.fixed_point import empirical_radius, fixed_point_solve, scaled_initial
from heatedstring.spectral.norms import theta_infinity
from heatedstring.spectral.types import SpectralState

H = 1.0 / 32.0


@pytest.fixture()
def small_data(unit_params) -> SpectralState:
    """Small-data initial state with theta_inf = 1."""
    return initial_state(InitialSpec(preset="small-data", seed=1), unit_params)


def test_picard_converges_for_small_data(unit_params, small_data):
    """Iterates contract and the final distance is below the tolerance."""
    result = fixed_point_solve(small_data, unit_params, 1.0, 1.0, H, n_split=9, alpha=0.07)
    assert result.history[-1].x_norm_diff < 1e-10
    assert result.iterations == len(result.history) >= 2
    assert np.isnan(result.history[0].ratio)
    assert result.max_ratio < 1.0
    assert result.alpha == 0.07
    assert result.basis.n_split == 9
    assert result.trajectory.U.shape == (33, 8, 3)
    np.testing.assert_allclose(result.trajectory.times[-1], 1.0)


def test_picard_equilibrium_is_immediate(unit_params):
    """From the equilibrium the first image already coincides with the start."""
    result = fixed_point_solve(SpectralState.zeros(8, theta0=1.0), unit_params, 1.0, 0.5, H, alpha=0.07)
    assert result.iterations == 1
    assert result.history[0].x_norm_diff < 1e-14
    assert np.isnan(result.max_ratio)


def test_picard_iteration_cap(unit_params, small_data):
    """Running out of iterations raises DivergenceError with the ratio history."""
    with pytest.raises(DivergenceError) as info:
        fixed_point_solve(small_data, unit_params, 1.0, 1.0, H, tol=0.0, n_split=9, alpha=0.07, max_iter=1)
    assert len(info.value.ratios) == 1


def test_picard_needs_whole_steps(unit_params, small_data):
    """The window must be a whole number of sample spacings."""
    with pytest.raises(DomainError):
        fixed_point_solve(small_data, unit_params, 1.0, 1.01, H, alpha=0.07)
    with pytest.raises(DomainError):
        fixed_point_solve(small_data, unit_params, 1.0, 1.0, 0.0, alpha=0.07)


def test_scaled_initial_keeps_theta_inf(small_state):
    """Rescaling the deviation leaves theta_infinity unchanged."""
    theta_inf = theta_infinity(small_state)
    scaled = scaled_initial(small_state, theta_inf, 3.0)
    np.testing.assert_allclose(scaled.u, 3.0 * small_state.u)
    np.testing.assert_allclose(scaled.theta, 3.0 * small_state.theta)
    assert theta_infinity(scaled) == pytest.approx(theta_inf, rel=1e-13)


def test_empirical_radius(unit_params, small_data):
    """Probes come back sorted by size and small ones converge."""
    probes = empirical_radius(small_data, unit_params, 1.0, 0.5, H, [1e-3, 1e-4], n_split=9, alpha=0.07)
    assert [probe.size for probe in probes] == pytest.approx([1e-4, 1e-3], rel=1e-8)
    assert all(probe.converged for probe in probes)
    assert all(probe.max_ratio < 1.0 for probe in probes)
    with pytest.raises(DomainError):
        empirical_radius(SpectralState.zeros(8, theta0=1.0), unit_params, 1.0, 0.5, H, [1e-3])
