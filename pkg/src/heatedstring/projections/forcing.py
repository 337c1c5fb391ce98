"""Forcing F_n of the projected equations U_n' = diag(lambda_n) U_n + F_n for the leading-order basis.

F_n is linear in y_n = (n u_n, v_n, theta_n) with O(1/n) coefficients, plus the remainder g3_n
weighted by the third entries of V_1, V_2, V_3.
"""

from typing import Tuple, Union

import numpy as np

from heatedstring.nonlinear.system import g3_all
from heatedstring.spectral.types import ModelParams, SpectralState
from heatedstring.utils.validate import validate_mode


def forcing_coefficients(n_modes: int, mu: float, a: float) -> Tuple[np.ndarray, np.ndarray]:
    """Coefficients of F in terms of y and g3.

    Returns:
        An (N, 3, 3) array L with F_n = L_n y_n + w_n g3_n, and the (N, 3) array w.
    """
    n = np.arange(1, n_modes + 1, dtype=float)
    k = a * mu**2
    linear = np.zeros((n_modes, 3, 3), dtype=complex)
    linear[:, 0, 0] = a * k * mu / n**2
    linear[:, 0, 1] = -a * mu / n
    linear[:, 0, 2] = k**2 / n**2
    pair_v = k / n - k**2 / (4.0 * n)
    pair_theta_re = a * mu**3 / (2.0 * n**2) - a**2 * mu**5 / (4.0 * n**2)
    pair_theta_im = mu / n - a * mu**3 / n
    linear[:, 1, 1] = pair_v
    linear[:, 1, 2] = pair_theta_re + 1j * pair_theta_im
    linear[:, 2, 1] = pair_v
    linear[:, 2, 2] = pair_theta_re - 1j * pair_theta_im
    weights = np.empty((n_modes, 3), dtype=complex)
    weights[:, 0] = 1.0 - k / n**2
    pair_g_re = mu / n**2 - a * mu**3 / (2.0 * n**2)
    weights[:, 1] = pair_g_re - 1j * mu / n
    weights[:, 2] = pair_g_re + 1j * mu / n
    return linear, weights


def forcing_all(theta0: Union[float, complex], y: np.ndarray, mu: float, a: float) -> np.ndarray:
    """F_n for every mode from complex mode vectors ``y`` of shape (N, 3)."""
    linear, weights = forcing_coefficients(y.shape[0], mu, a)
    g = g3_all(theta0, y[:, 2], y[:, 1], mu, a)
    return np.einsum("nij,nj->ni", linear, y) + weights * g[:, None]


def forcing_F(state: SpectralState, params: ModelParams, n: int) -> np.ndarray:
    """(F_1n, F_2n, F_3n) at linearization temperature ``params.a``.

    Example:
        >>> params = ModelParams(mu=1.0, a=1.0, n_modes=2)
        >>> forcing_F(SpectralState.zeros(2, theta0=1.0), params, 2).tolist()
        [0j, 0j, 0j]
    """
    validate_mode(n, n_max=params.n_modes)
    state.check(params)
    return forcing_all(state.theta0, state.mode_vectors().astype(complex), params.mu, params.a)[n - 1]
