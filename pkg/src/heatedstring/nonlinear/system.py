"""Right hand side of the truncated Galerkin system.

For n = 1..N, with y_n = (n u_n, v_n, theta_n):

    u_n'      = v_n
    v_n'      = -n^2 u_n - mu n theta_n
    theta_0'  = (mu/2) sum_l theta_l l v_l
    theta_n'  = -n^2 theta_n + (mu/2) Q_n + mu theta_0 n v_n

where Q_n is the sum of a Cauchy convolution and two tail sums of theta against (l v_l).
Modes beyond N are zero.
"""

from typing import NamedTuple, Union

import numpy as np

from heatedstring.spectral.estimates import cauchy_all, tail_all
from heatedstring.spectral.types import ModelParams, SpectralState
from heatedstring.utils.validate import validate_mode


class RhsOutput(NamedTuple):
    """Time derivatives of a spectral state."""

    d_theta0: float
    """Derivative of the mean temperature."""
    d_u: np.ndarray
    """Derivatives of the displacement coefficients."""
    d_v: np.ndarray
    """Derivatives of the velocity coefficients."""
    d_theta: np.ndarray
    """Derivatives of the temperature coefficients, modes 1..N."""

    def to_vector(self) -> np.ndarray:
        """Pack in the order used by ``SpectralState.to_vector``."""
        return np.concatenate(([self.d_theta0], self.d_u, self.d_v, self.d_theta))


def quadratic_sums(theta: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Q_n = sum_{k<n} theta_{n-k} k v_k + sum_l theta_{l+n} l v_l + sum_l theta_l (l+n) v_{l+n}, n = 1..N.

    Accepts complex sequences.
    """
    n_modes = len(theta)
    kv = np.arange(1, n_modes + 1, dtype=float) * v
    return cauchy_all(theta, kv, n_modes) + tail_all(theta, kv, n_modes) + tail_all(kv, theta, n_modes)


def mean_temperature_rate(theta: np.ndarray, v: np.ndarray, mu: float) -> Union[float, complex]:
    """(mu/2) sum_l theta_l l v_l."""
    return 0.5 * mu * np.sum(theta * np.arange(1, len(theta) + 1, dtype=float) * v)


def g3_all(theta0: Union[float, complex], theta: np.ndarray, v: np.ndarray, mu: float, a: float) -> np.ndarray:
    """Nonlinear remainder of the temperature equations relative to the linearization at ``a``.

    g3_n = (mu/2) Q_n + mu (theta0 - a) n v_n for n = 1..N. Accepts complex arguments.
    """
    n = np.arange(1, len(theta) + 1, dtype=float)
    return 0.5 * mu * quadratic_sums(theta, v) + mu * (theta0 - a) * n * v


def g3(state: SpectralState, params: ModelParams, n: int) -> float:
    """Remainder g3 of mode ``n`` at linearization temperature ``params.a``."""
    validate_mode(n, n_max=params.n_modes)
    state.check(params)
    return float(g3_all(state.theta0, state.theta, state.v, params.mu, params.a)[n - 1])


def rhs(state: SpectralState, params: ModelParams) -> RhsOutput:
    """Evaluate the truncated system.

    Args:
        state: Current coefficients.
        params: Supplies mu and N.

    Returns:
        The derivatives; total energy is conserved exactly by this vector field.

    Example:
        >>> params = ModelParams(mu=1.0, a=1.0, n_modes=1)
        >>> out = rhs(SpectralState(0.0, [1.0], [0.0], [0.0]), params)
        >>> float(out.d_v[0]), float(out.d_theta0)
        (-1.0, 0.0)
    """
    state.check(params)
    return rhs_arrays(state.theta0, state.u, state.v, state.theta, params.mu)


def rhs_arrays(theta0: float, u: np.ndarray, v: np.ndarray, theta: np.ndarray, mu: float) -> RhsOutput:
    """Unvalidated form of ``rhs`` on raw coefficient arrays."""
    n = np.arange(1, len(u) + 1, dtype=float)
    d_theta = -(n**2) * theta + 0.5 * mu * quadratic_sums(theta, v) + mu * theta0 * n * v
    return RhsOutput(
        d_theta0=float(mean_temperature_rate(theta, v, mu)),
        d_u=np.array(v, dtype=float),
        d_v=-(n**2) * u - mu * n * theta,
        d_theta=d_theta,
    )


def linear_rhs(state: SpectralState, params: ModelParams) -> RhsOutput:
    """Linear part A_{n,a} y_n of the system, with the mean temperature frozen."""
    state.check(params)
    n = params.modes
    mu = params.mu
    return RhsOutput(
        d_theta0=0.0,
        d_u=state.v.copy(),
        d_v=-(n**2) * state.u - mu * n * state.theta,
        d_theta=-(n**2) * state.theta + params.a * mu * n * state.v,
    )


def energy_rate(state: SpectralState, params: ModelParams) -> float:
    """Time derivative of the energy along ``rhs``; zero up to round-off."""
    out = rhs(state, params)
    n = params.modes
    wave = 0.5 * np.pi * float(np.sum(state.v * out.d_v) + np.sum(n**2 * state.u * out.d_u))
    return wave + np.pi * out.d_theta0
