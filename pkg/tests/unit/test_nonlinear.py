"""Tests for the truncated Galerkin right hand side."""

import numpy as np
import pytest

from heatedstring.exceptions import DomainError
from heatedstring.nonlinear.system import energy_rate, g3, g3_all, linear_rhs, quadratic_sums, rhs
from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.types import ModelParams, SpectralState


def _coefficient(values, k):
    return values[k - 1] if 1 <= k <= len(values) else 0.0


def _brute_quadratic(theta, v, n):
    n_modes = len(theta)
    total = 0.0
    for k in range(1, n):
        total += _coefficient(theta, n - k) * k * _coefficient(v, k)
    for l in range(1, n_modes + 1):
        total += _coefficient(theta, l + n) * l * _coefficient(v, l)
        total += _coefficient(theta, l) * (l + n) * _coefficient(v, l + n)
    return total


def test_zero_state_is_stationary():
    """Everything vanishes at the zero state."""
    params = ModelParams(mu=1.0, a=1.0, n_modes=4)
    np.testing.assert_array_equal(rhs(SpectralState.zeros(4), params).to_vector(), np.zeros(13))


def test_pure_heat():
    """With u = v = 0 temperature modes decay like -n^2 and push on the velocity."""
    params = ModelParams(mu=0.5, a=1.0, n_modes=3)
    theta = np.array([1.0, -2.0, 0.5])
    out = rhs(SpectralState(1.0, np.zeros(3), np.zeros(3), theta), params)
    n = params.modes
    np.testing.assert_allclose(out.d_theta, -(n**2) * theta)
    np.testing.assert_allclose(out.d_v, -0.5 * n * theta)
    assert out.d_theta0 == 0.0


def test_quadratic_sums_match_loops(rng):
    """Q_n agrees with the direct triple sum for small truncations."""
    for n_modes in (1, 2, 3, 6):
        theta = rng.normal(size=n_modes)
        v = rng.normal(size=n_modes)
        q = quadratic_sums(theta, v)
        for n in range(1, n_modes + 1):
            assert q[n - 1] == pytest.approx(_brute_quadratic(theta, v, n), abs=1e-12)


def test_rhs_matches_loops_for_three_modes(rng):
    """Every component of rhs for N = 3 against an explicit evaluation."""
    params = ModelParams(mu=0.7, a=1.0, n_modes=3)
    state = random_state(params, rng)
    out = rhs(state, params)
    for n in range(1, 4):
        theta_n, v_n, u_n = state.theta[n - 1], state.v[n - 1], state.u[n - 1]
        quadratic = 0.35 * _brute_quadratic(state.theta, state.v, n)
        expected_theta = -(n**2) * theta_n + quadratic + 0.7 * state.theta0 * n * v_n
        assert out.d_theta[n - 1] == pytest.approx(expected_theta, abs=1e-12)
        assert out.d_v[n - 1] == pytest.approx(-(n**2) * u_n - 0.7 * n * theta_n, abs=1e-12)
    expected_theta0 = 0.35 * sum(state.theta[k] * (k + 1) * state.v[k] for k in range(3))
    assert out.d_theta0 == pytest.approx(expected_theta0, abs=1e-12)


def test_g3_splits_rhs(rng):
    """rhs = linear part at a + g3, for any linearization temperature."""
    for a in (0.5, 1.0, 3.0):
        params = ModelParams(mu=1.2, a=a, n_modes=8)
        state = random_state(params, rng, theta0=1.3)
        full = rhs(state, params).d_theta
        split = linear_rhs(state, params).d_theta + g3_all(state.theta0, state.theta, state.v, params.mu, a)
        np.testing.assert_allclose(full, split, atol=1e-12)
        assert g3(state, params, 2) == pytest.approx(split[1] - linear_rhs(state, params).d_theta[1], abs=1e-12)


@pytest.mark.parametrize("n", [0, 9, 20])
def test_g3_rejects_modes_outside_truncation(n):
    """Only modes 1..N carry a remainder."""
    params = ModelParams(mu=1.0, a=1.0, n_modes=8)
    with pytest.raises(DomainError):
        g3(SpectralState.zeros(8, theta0=1.0), params, n)


def test_energy_rate_vanishes(rng):
    """The truncated vector field conserves the energy exactly."""
    for n_modes in (1, 4, 16):
        params = ModelParams(mu=0.8, a=1.0, n_modes=n_modes)
        for _ in range(20):
            state = random_state(params, rng, amplitude=3.0)
            assert energy_rate(state, params) == pytest.approx(0.0, abs=1e-11)
