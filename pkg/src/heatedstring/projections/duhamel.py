"""Duhamel (variation of constants) map on projected trajectories.

Given a trajectory, the map returns the trajectory obtained by freezing the nonlinear terms at the given
one and solving the linear equations exactly:

* modes n >= n_split: the scalar equations U_jn' = lambda_jn U_jn + F_jn with exact exponential weights
  for a forcing that is piecewise linear between samples;
* modes n < n_split: y_n' = A_{n,theta_inf} y_n + (0, 0, g3_n) through the matrix exponential and phi functions,
  then mapped back with B_n;
* the mean temperature: theta0(t) = theta0(0) + (mu/2) int_0^t sum_l theta_l l v_l.
"""

import functools
import logging
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid

from heatedstring.constants import DUHAMEL_MAX_STEP_PHASE
from heatedstring.exceptions import DomainError, StepSizeError
from heatedstring.linear.matrices import build_A
from heatedstring.nonlinear.system import g3_all
from heatedstring.projections.basis import ProjectionBasis, build_basis
from heatedstring.projections.expm import expm_phi, phi_functions
from heatedstring.projections.forcing import forcing_coefficients
from heatedstring.projections.state import ProjectionState, ProjectionTrajectory
from heatedstring.spectral.types import ModelParams

logger = logging.getLogger("heatedstring.projections")


class SupBound(NamedTuple):
    """Sides of sup e^(gamma t) g(t) <= sup e^(gamma t) |f(t)| / (beta - gamma)."""

    lhs: float
    """Weighted supremum of g(t) = int_0^t e^(-beta (t - s)) |f(s)| ds."""
    rhs: float
    """Weighted supremum of |f| divided by beta - gamma."""

    @property
    def holds(self) -> bool:
        """Whether lhs <= rhs up to round-off."""
        return self.lhs <= self.rhs * (1.0 + 1e-10) + 1e-300


def uniform_step(times: np.ndarray) -> float:
    """Step of a uniform grid starting at zero."""
    times = np.asarray(times, dtype=float)
    if len(times) < 2 or times[0] != 0.0:
        raise DomainError("a time grid needs at least two samples and must start at t = 0")
    steps = np.diff(times)
    h = float(steps[0])
    if h <= 0 or not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        raise DomainError("the time grid must be uniform and increasing")
    return h


def check_step(h: float, n_modes: int, max_phase: float = DUHAMEL_MAX_STEP_PHASE) -> None:
    """Reject steps for which the fastest retained oscillation is under-resolved."""
    if h * n_modes > max_phase:
        raise StepSizeError(
            f"step h={h:g} is too coarse for {n_modes} modes: h*N={h * n_modes:.3g} exceeds {max_phase:g}"
        )


def exponential_weights(lambdas: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """e^(lambda h) and the weights of F_k and F_{k+1} for piecewise-linear forcing."""
    z = np.asarray(lambdas) * h
    phi1, phi2 = phi_functions(z)
    return np.exp(z), h * (phi1 - phi2), h * phi2


@functools.lru_cache(maxsize=256)
def _mode_propagator(params: ModelParams, n: int, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """e^{hA}, h (phi1 - phi2)(hA) e3 and h phi2(hA) e3 for one mode."""
    prop, phi1, phi2 = expm_phi(build_A(n, params), h)
    return prop, h * (phi1 - phi2)[:, 2], h * phi2[:, 2]


def duhamel_map(
    trajectory: ProjectionTrajectory,
    initial: ProjectionState,
    params: ModelParams,
    theta_inf: float,
    basis: Optional[ProjectionBasis] = None,
    max_phase: float = DUHAMEL_MAX_STEP_PHASE,
) -> ProjectionTrajectory:
    """Apply the Duhamel map to ``trajectory``.

    Args:
        trajectory: Current iterate on a uniform grid starting at 0.
        initial: Initial projected data; the result starts exactly there.
        params: Model parameters; the linearization temperature is taken from ``theta_inf``.
        theta_inf: Linearization temperature.
        basis: Bases built for ``params.with_a(theta_inf)``; built with the default split if omitted.
        max_phase: Largest accepted h * N.

    Raises:
        StepSizeError: If the grid is too coarse for the retained modes.
    """
    lin = params.with_a(theta_inf)
    if basis is None:
        basis = build_basis(lin)
    elif not np.isclose(basis.params.a, theta_inf, rtol=1e-12, atol=0.0):
        raise DomainError(f"basis was built for a={basis.params.a!r}, not theta_inf={theta_inf!r}")
    h = uniform_step(trajectory.times)
    n_modes = lin.n_modes
    check_step(h, n_modes, max_phase)
    if trajectory.U.shape[1] != n_modes or initial.n_modes != n_modes:
        raise DomainError(f"trajectory and initial data must have {n_modes} modes")
    mu = lin.mu
    count = len(trajectory.times)
    n = lin.modes

    y = np.einsum("nij,tnj->tni", basis.inverses, trajectory.U)
    g = np.stack([g3_all(trajectory.theta0[k], y[k, :, 2], y[k, :, 1], mu, theta_inf) for k in range(count)])
    heat_flux = np.sum(y[:, :, 2] * n * y[:, :, 1], axis=1)
    theta0 = initial.theta0 + 0.5 * mu * cumulative_trapezoid(heat_flux, dx=h, initial=0.0)

    psi = np.empty_like(trajectory.U)
    psi[0] = initial.U
    split = min(basis.n_split, n_modes + 1) - 1

    if split < n_modes:
        linear, weights = forcing_coefficients(n_modes, mu, theta_inf)
        hi = slice(split, n_modes)
        forcing = np.einsum("nij,tnj->tni", linear[hi], y[:, hi]) + weights[hi][None, :, :] * g[:, hi, None]
        lambdas = np.stack([basis.modes[k].lambdas for k in range(split, n_modes)])
        decay, w_now, w_next = exponential_weights(lambdas, h)
        for k in range(count - 1):
            psi[k + 1, hi] = decay * psi[k, hi] + w_now * forcing[k] + w_next * forcing[k + 1]

    for idx in range(split):
        mode = basis.modes[idx]
        prop, w_now, w_next = _mode_propagator(lin, idx + 1, h)
        state = mode.inverse @ initial.U[idx]
        for k in range(count - 1):
            state = prop @ state + w_now * g[k, idx] + w_next * g[k + 1, idx]
            psi[k + 1, idx] = mode.matrix @ state

    return ProjectionTrajectory(trajectory.times, theta0, psi)


def duhamel_sup_bound_check(f: np.ndarray, times: np.ndarray, beta: float, gamma: float) -> SupBound:
    """Check the weighted supremum bound for g(t) = int_0^t e^(-beta (t - s)) |f(s)| ds on a sample grid.

    |f| is interpolated linearly between samples and g is integrated exactly for that interpolant.
    The right hand side bounds the weighted supremum of the interpolant on every interval.

    Example:
        >>> times = np.linspace(0.0, 40.0, 4001)
        >>> check = duhamel_sup_bound_check(np.ones_like(times), times, 1.0, 0.0)
        >>> check.holds, round(check.rhs, 12)
        (True, 1.0)
    """
    if not beta > gamma:
        raise DomainError(f"need beta > gamma, got beta={beta!r}, gamma={gamma!r}")
    h = uniform_step(times)
    values = np.abs(np.asarray(f, dtype=float))
    decay, w_now, w_next = exponential_weights(np.array([-beta]), h)
    g = np.empty_like(values)
    g[0] = 0.0
    for k in range(len(values) - 1):
        g[k + 1] = decay[0] * g[k] + w_now[0] * values[k] + w_next[0] * values[k + 1]
    weight = np.exp(gamma * np.asarray(times, dtype=float))
    lhs = float(np.max(weight * g))
    interval_weight = np.maximum(weight[:-1], weight[1:])
    interval_value = np.maximum(values[:-1], values[1:])
    rhs = float(np.max(interval_weight * interval_value)) / (beta - gamma)
    return SupBound(lhs, rhs)
