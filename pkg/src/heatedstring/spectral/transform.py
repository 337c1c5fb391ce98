"""Conversion between Fourier coefficients and grid samples on [0, pi].

Both directions are exact on the retained modes: the composite trapezoid rule on M + 1 points
integrates every product of two modes of index at most N exactly when M >= 2N + 1.

Example:
    >>> import numpy as np
    >>> from heatedstring.spectral.types import ModelParams, SpectralState
    >>> params = ModelParams(mu=1.0, a=1.0, n_modes=2, grid_points=8)
    >>> state = SpectralState(1.0, [1.0, 0.0], [0.0, 0.0], [0.0, 0.5])
    >>> back = analyze(synthesize(state, params), params)
    >>> bool(np.allclose(back.u, state.u) and np.allclose(back.theta, state.theta))
    True
"""

import numpy as np

from heatedstring.exceptions import AliasingError
from heatedstring.spectral.types import GridField, ModelParams, SpectralState
from heatedstring.utils.validate import validate_length


def grid(params: ModelParams) -> np.ndarray:
    """Collocation points x_j = j pi / M, j = 0..M."""
    return np.linspace(0.0, np.pi, params.grid_points + 1)


def _sine_matrix(n_modes: int, x: np.ndarray) -> np.ndarray:
    return np.sin(np.outer(np.arange(1, n_modes + 1), x))


def _cosine_matrix(n_modes: int, x: np.ndarray) -> np.ndarray:
    return np.cos(np.outer(np.arange(1, n_modes + 1), x))


def synthesize(state: SpectralState, params: ModelParams) -> GridField:
    """Evaluate u, u_t and theta on the grid.

    Args:
        state: Coefficients of length N.
        params: Supplies N and M.

    Returns:
        The grid samples; u is exactly zero at both ends.
    """
    state.check(params)
    x = grid(params)
    sines = _sine_matrix(params.n_modes, x)
    u = state.u @ sines
    u_t = state.v @ sines
    u[0] = u[-1] = 0.0
    u_t[0] = u_t[-1] = 0.0
    theta = state.theta0 + state.theta @ _cosine_matrix(params.n_modes, x)
    return GridField(x, u, u_t, theta)


def synthesize_slope(state: SpectralState, params: ModelParams) -> np.ndarray:
    """Evaluate u_x = sum n u_n cos(nx) on the grid."""
    state.check(params)
    return (params.modes * state.u) @ _cosine_matrix(params.n_modes, grid(params))


def trapezoid_weights(grid_points: int) -> np.ndarray:
    """Composite trapezoid weights for M intervals on [0, pi]."""
    weights = np.full(grid_points + 1, np.pi / grid_points)
    weights[0] = weights[-1] = 0.5 * np.pi / grid_points
    return weights


def analyze(field: GridField, params: ModelParams) -> SpectralState:
    """Project grid samples onto the retained modes.

    Args:
        field: Samples on the M + 1 grid points.
        params: Supplies N and M.

    Returns:
        The Fourier coefficients of the field.

    Raises:
        AliasingError: If M < 2N + 1.
    """
    if params.grid_points < 2 * params.n_modes + 1:
        raise AliasingError(
            f"grid of {params.grid_points} intervals cannot resolve {params.n_modes} modes; "
            f"need at least {2 * params.n_modes + 1}"
        )
    validate_length("grid field", field.x, params.grid_points + 1)
    weights = trapezoid_weights(params.grid_points)
    sines = _sine_matrix(params.n_modes, field.x) * weights
    cosines = _cosine_matrix(params.n_modes, field.x) * weights
    u = (2.0 / np.pi) * (sines @ field.u)
    v = (2.0 / np.pi) * (sines @ field.u_t)
    theta = (2.0 / np.pi) * (cosines @ field.theta)
    theta0 = float(weights @ field.theta) / np.pi
    return SpectralState(theta0, u, v, theta)
