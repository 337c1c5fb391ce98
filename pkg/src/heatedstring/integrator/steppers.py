"""Single-step time integrators for the truncated system.

``step_etd`` is a second-order exponential Runge-Kutta scheme: the linearization A_{n,a} of every mode is
integrated exactly through its matrix exponential and phi functions, and only the remainder g3 and the mean
temperature equation are treated explicitly. It is exact on linear dynamics and free of the n^2 stiffness
restriction. ``step_rk4`` is the classical explicit scheme applied to the full right hand side.
"""

import functools
from typing import Tuple

import numpy as np

from heatedstring.constants import RK4_STABILITY_MARGIN
from heatedstring.exceptions import InstabilityError, StepSizeError
from heatedstring.linear.matrices import build_A
from heatedstring.nonlinear.system import g3_all, mean_temperature_rate, rhs_arrays
from heatedstring.projections.expm import expm_phi
from heatedstring.spectral.types import ModelParams, SpectralState
from heatedstring.utils.validate import validate_positive


@functools.lru_cache(maxsize=32)
def _etd_coefficients(params: ModelParams, dt: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Stacked e^{dt A_n}, dt phi1(dt A_n) e3 and dt phi2(dt A_n) e3 for n = 1..N."""
    props, first, second = [], [], []
    for n in range(1, params.n_modes + 1):
        prop, phi1, phi2 = expm_phi(build_A(n, params), dt)
        props.append(prop)
        first.append(dt * phi1[:, 2])
        second.append(dt * phi2[:, 2])
    return np.stack(props), np.stack(first), np.stack(second)


def _first_bad_mode(values: np.ndarray) -> int:
    """1-based index of the first mode with a non-finite entry, 0 if only theta0 is affected."""
    bad = ~np.isfinite(values).reshape(len(values), -1).all(axis=1)
    return int(np.argmax(bad)) + 1 if bad.any() else 0


def step_etd(state: SpectralState, params: ModelParams, dt: float) -> SpectralState:
    """Advance one exponential Runge-Kutta step of size ``dt``, linearized at ``params.a``.

    Raises:
        InstabilityError: If the step produces non-finite coefficients.
    """
    validate_positive("dt", dt)
    state.check(params)
    props, first, second = _etd_coefficients(params, float(dt))
    mu, a = params.mu, params.a
    y = state.mode_vectors()
    g_now = g3_all(state.theta0, y[:, 2], y[:, 1], mu, a)
    rate_now = mean_temperature_rate(y[:, 2], y[:, 1], mu)
    y_stage = np.einsum("nij,nj->ni", props, y) + first * g_now[:, None]
    theta0_stage = state.theta0 + dt * rate_now
    g_stage = g3_all(theta0_stage, y_stage[:, 2], y_stage[:, 1], mu, a)
    rate_stage = mean_temperature_rate(y_stage[:, 2], y_stage[:, 1], mu)
    y_next = y_stage + second * (g_stage - g_now)[:, None]
    theta0_next = state.theta0 + 0.5 * dt * (rate_now + rate_stage)
    if not (np.all(np.isfinite(y_next)) and np.isfinite(theta0_next)):
        mode = _first_bad_mode(y_next)
        raise InstabilityError(f"etd step produced non-finite values (mode {mode})", mode=mode)
    return SpectralState.from_mode_vectors(theta0_next, y_next)


def check_rk4_step(params: ModelParams, dt: float) -> None:
    """Raise StepSizeError unless dt N^2 stays inside the explicit stability margin."""
    if dt * params.n_modes**2 > RK4_STABILITY_MARGIN:
        raise StepSizeError(
            f"rk4 step dt={dt:g} exceeds the stability limit {RK4_STABILITY_MARGIN:g}/N^2 for N={params.n_modes}"
        )


def step_rk4(state: SpectralState, params: ModelParams, dt: float) -> SpectralState:
    """Advance one classical Runge-Kutta step of size ``dt`` on the full right hand side.

    Raises:
        StepSizeError: If dt N^2 exceeds the stability margin.
        InstabilityError: If the step produces non-finite coefficients.
    """
    validate_positive("dt", dt)
    state.check(params)
    check_rk4_step(params, dt)
    n_modes = params.n_modes

    def vector_field(vec: np.ndarray) -> np.ndarray:
        u, v, theta = vec[1 : n_modes + 1], vec[n_modes + 1 : 2 * n_modes + 1], vec[2 * n_modes + 1 :]
        return rhs_arrays(vec[0], u, v, theta, params.mu).to_vector()

    with np.errstate(over="ignore", invalid="ignore"):
        x = state.to_vector()
        k1 = vector_field(x)
        k2 = vector_field(x + 0.5 * dt * k1)
        k3 = vector_field(x + 0.5 * dt * k2)
        k4 = vector_field(x + dt * k3)
        x_next = x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(x_next)):
        u, v, theta = x_next[1 : n_modes + 1], x_next[n_modes + 1 : 2 * n_modes + 1], x_next[2 * n_modes + 1 :]
        mode = _first_bad_mode(np.stack((u, v, theta), axis=1))
        raise InstabilityError(f"rk4 step produced non-finite values (mode {mode})", mode=mode)
    return SpectralState.from_vector(x_next)
