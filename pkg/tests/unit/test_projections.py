"""Tests for projection bases, the forcing, weighted norms and the Duhamel map."""

import numpy as np
import pytest
import scipy.linalg

from heatedstring.exceptions import BasisError, DimensionError, DomainError, StepSizeError
from heatedstring.linear.eigen import asymptotic_eigenvalues, asymptotic_vectors
from heatedstring.linear.matrices import build_A
from heatedstring.nonlinear.system import rhs
from heatedstring.projections.basis import build_basis, invert_checked
from heatedstring.projections.duhamel import duhamel_map, duhamel_sup_bound_check, uniform_step
from heatedstring.projections.forcing import forcing_all, forcing_coefficients, forcing_F
from heatedstring.projections.norms import initial_size, seq_norm_s, x_distance, x_norm
from heatedstring.projections.state import (
    ProjectionState,
    ProjectionTrajectory,
    from_projection,
    project_trajectory,
    to_projection,
    unproject_trajectory,
)
from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.types import ModelParams, SpectralState
from tests.utils import assert_states_close


def test_forcing_coefficients_are_exact(param_grid):
    """L_n = C_n^T A_{n,a} - D_n C_n^T and w_n = C_n^T e_3 with no truncation."""
    for a in param_grid.a_values:
        for mu in param_grid.mu_values:
            params = ModelParams(mu=mu, a=a, n_modes=20)
            linear, weights = forcing_coefficients(20, mu, a)
            for n in (1, 2, 5, 20):
                basis = asymptotic_vectors(n, params).T
                expected = basis @ build_A(n, params) - np.diag(asymptotic_eigenvalues(n, params)) @ basis
                np.testing.assert_allclose(linear[n - 1], expected, atol=1e-12 * n**2)
                np.testing.assert_allclose(weights[n - 1], basis[:, 2], atol=1e-14)


def test_forcing_matches_rhs(rng):
    """C_n^T y_n' = D_n C_n^T y_n + F_n along the truncated vector field."""
    params = ModelParams(mu=1.0, a=1.3, n_modes=8)
    for _ in range(100):
        state = random_state(params, rng, amplitude=2.0, theta0=rng.uniform(0.5, 2.0))
        out = rhs(state, params)
        n = params.modes
        y = state.mode_vectors()
        dy = np.stack((n * out.d_u, out.d_v, out.d_theta), axis=1)
        forcing = forcing_all(state.theta0, y.astype(complex), params.mu, params.a)
        for k in range(params.n_modes):
            basis = asymptotic_vectors(k + 1, params).T
            lhs = basis @ dy[k]
            rhs_value = asymptotic_eigenvalues(k + 1, params) * (basis @ y[k]) + forcing[k]
            scale = 1.0 + (k + 1) ** 2 * np.max(np.abs(y[k]))
            np.testing.assert_allclose(lhs, rhs_value, atol=1e-10 * scale)


def test_forcing_at_equilibrium():
    """F vanishes at equilibrium when linearized at its temperature."""
    params = ModelParams(mu=1.0, a=1.5, n_modes=3)
    state = SpectralState.zeros(3, theta0=1.5)
    for n in (1, 2, 3):
        np.testing.assert_array_equal(forcing_F(state, params, n), np.zeros(3))


@pytest.mark.parametrize("n", [0, 4, 7])
def test_forcing_rejects_modes_outside_truncation(n):
    """F is defined for modes 1..N only."""
    params = ModelParams(mu=1.0, a=1.5, n_modes=3)
    with pytest.raises(DomainError):
        forcing_F(SpectralState.zeros(3, theta0=1.5), params, n)


def test_basis_kinds(unit_params):
    """Exact bases below the split and leading-order bases from it on."""
    basis = build_basis(unit_params)
    assert basis.n_split == 4
    kinds = [mode.kind for mode in basis.modes]
    assert kinds[3:] == ["asymptotic"] * 5
    assert set(kinds[:3]) <= {"eigen", "schur"}
    for mode in basis.modes:
        np.testing.assert_allclose(mode.matrix @ mode.inverse, np.eye(3), atol=1e-10)
    assert basis.matrices.shape == (8, 3, 3)
    assert all(mode.kind == "asymptotic" for mode in build_basis(unit_params, n_split=1).modes)
    with pytest.raises(DomainError):
        build_basis(unit_params, n_split=0)


def test_invert_checked_singular():
    """A singular basis matrix raises BasisError."""
    with pytest.raises(BasisError):
        invert_checked(np.zeros((3, 3)))


def test_projection_round_trip(unit_params, rng):
    """to_projection and from_projection invert each other for every basis choice."""
    for n_split in (1, 4, 9):
        basis = build_basis(unit_params, n_split)
        state = random_state(unit_params, rng)
        pstate = to_projection(state, unit_params, basis)
        assert pstate.U.shape == (8, 3)
        assert_states_close(from_projection(pstate, unit_params, basis), state, 1e-10)


def test_asymptotic_projection_is_conjugate(unit_params, small_state):
    """For a real state U_3 is the conjugate of U_2 in the leading-order basis."""
    basis = build_basis(unit_params, n_split=1)
    pstate = to_projection(small_state, unit_params, basis)
    np.testing.assert_allclose(pstate.U[:, 2], np.conj(pstate.U[:, 1]), atol=1e-14)
    np.testing.assert_allclose(pstate.U[:, 0].imag, 0.0, atol=1e-14)


def test_from_projection_rejects_complex(unit_params):
    """Projected variables that are not the image of a real state are refused."""
    basis = build_basis(unit_params, n_split=1)
    pstate = ProjectionState(1.0, np.zeros((8, 3)) + 1j * np.eye(8, 3))
    with pytest.raises(DomainError):
        from_projection(pstate, unit_params, basis)


def test_projection_state_shapes():
    """Projected states and trajectories check their shapes."""
    with pytest.raises(DimensionError):
        ProjectionState(1.0, np.zeros((4, 2)))
    with pytest.raises(DimensionError):
        ProjectionTrajectory(np.zeros(3), np.zeros(3), np.zeros((2, 4, 3)))


def test_trajectory_round_trip(unit_params, rng):
    """Projecting and unprojecting a list of states is lossless."""
    basis = build_basis(unit_params)
    states = [random_state(unit_params, rng) for _ in range(4)]
    times = np.linspace(0.0, 0.3, 4)
    trajectory = project_trajectory(states, times, unit_params, basis)
    assert trajectory.step == pytest.approx(0.1)
    for first, second in zip(unproject_trajectory(trajectory, unit_params, basis), states):
        assert_states_close(first, second, 1e-10)


def test_seq_norm_weights():
    """The supremum runs over time before the weighted sum over modes."""
    times = np.array([0.0, 1.0])
    z = np.array([[1.0, 0.0], [0.0, 1.0]])
    assert seq_norm_s(z, times, 1.0, 0.0) == pytest.approx(np.sqrt(1.0 + 4.0))
    assert seq_norm_s(z, times, 0.0, np.log(2.0)) == pytest.approx(np.sqrt(1.0 + 4.0))
    with pytest.raises(DimensionError):
        seq_norm_s(z, np.zeros(3), 1.0, 0.0)


def test_x_norm_of_equilibrium(unit_params):
    """The equilibrium has zero X-norm and zero initial size."""
    basis = build_basis(unit_params)
    pstate = to_projection(SpectralState.zeros(8, theta0=1.0), unit_params, basis)
    trajectory = ProjectionTrajectory.constant(pstate, np.linspace(0.0, 1.0, 5))
    report = x_norm(trajectory, unit_params, 0.1, 1.0)
    assert report.x_norm == 0.0
    assert initial_size(pstate, unit_params, 1.0) == 0.0
    assert x_distance(trajectory, trajectory, unit_params.s, 0.1) == 0.0


def test_x_norm_theta0_component(unit_params):
    """The mean temperature contributes its largest deviation."""
    basis = build_basis(unit_params)
    pstate = to_projection(SpectralState.zeros(8, theta0=1.25), unit_params, basis)
    trajectory = ProjectionTrajectory.constant(pstate, np.linspace(0.0, 1.0, 3))
    assert x_norm(trajectory, unit_params, 0.0, 1.0).theta0_dev == pytest.approx(0.25)
    assert initial_size(pstate, unit_params, 1.0) == pytest.approx(0.25)


def test_uniform_step_validation():
    """Grids must start at zero and be uniform."""
    assert uniform_step(np.array([0.0, 0.5, 1.0])) == 0.5
    with pytest.raises(DomainError):
        uniform_step(np.array([0.1, 0.2]))
    with pytest.raises(DomainError):
        uniform_step(np.array([0.0, 0.1, 0.3]))


def test_duhamel_fixes_equilibrium(unit_params):
    """The equilibrium trajectory is a fixed point of the Duhamel map."""
    lin = unit_params.with_a(1.0)
    basis = build_basis(lin)
    pstate = to_projection(SpectralState.zeros(8, theta0=1.0), lin, basis)
    trajectory = ProjectionTrajectory.constant(pstate, np.linspace(0.0, 1.0, 33))
    image = duhamel_map(trajectory, pstate, unit_params, 1.0, basis)
    np.testing.assert_allclose(image.U, trajectory.U, atol=1e-15)
    np.testing.assert_allclose(image.theta0, 1.0)


def test_duhamel_linear_propagation(unit_params):
    """A single low mode with theta0 = theta_inf evolves as e^{tA} y up to the quadrature error."""
    lin = unit_params.with_a(1.0)
    basis = build_basis(lin)
    y0 = np.zeros((8, 3))
    y0[0] = (1.0, 0.0, 0.0)
    state = SpectralState.from_mode_vectors(1.0, y0)
    pstate = to_projection(state, lin, basis)
    times = np.linspace(0.0, 1.0, 33)
    image = duhamel_map(ProjectionTrajectory.constant(pstate, times), pstate, unit_params, 1.0, basis)
    final = from_projection(image.at(32), lin, basis)
    exact = scipy.linalg.expm(build_A(1, lin)) @ y0[0]
    np.testing.assert_allclose(final.mode_vectors()[0], exact, atol=1e-12)
    np.testing.assert_allclose(final.mode_vectors()[1:], 0.0, atol=1e-15)


def test_duhamel_refuses_coarse_steps(unit_params):
    """h N above the phase limit raises StepSizeError."""
    basis = build_basis(unit_params)
    pstate = to_projection(SpectralState.zeros(8, theta0=1.0), unit_params, basis)
    trajectory = ProjectionTrajectory.constant(pstate, np.linspace(0.0, 1.0, 11))
    with pytest.raises(StepSizeError):
        duhamel_map(trajectory, pstate, unit_params, 1.0, basis)
    with pytest.raises(DomainError):
        duhamel_map(trajectory, pstate, unit_params, 2.0, basis)


def test_duhamel_sup_bound(rng):
    """The weighted supremum bound holds for random non-negative forcings."""
    times = np.linspace(0.0, 20.0, 2001)
    for _ in range(20):
        f = rng.uniform(0.0, 1.0, len(times)) * np.exp(-rng.uniform(0.0, 0.5) * times)
        beta = rng.uniform(0.5, 3.0)
        gamma = rng.uniform(0.0, 0.9) * beta
        assert duhamel_sup_bound_check(f, times, beta, gamma).holds
    with pytest.raises(DomainError):
        duhamel_sup_bound_check(np.ones(3), np.linspace(0.0, 1.0, 3), 1.0, 1.0)
