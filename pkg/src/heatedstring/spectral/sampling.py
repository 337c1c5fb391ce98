"""Random smooth initial states."""

import numpy as np

from heatedstring.spectral.types import ModelParams, SpectralState
from heatedstring.utils.validate import validate_positive


def random_state(
    params: ModelParams,
    rng: np.random.Generator,
    amplitude: float = 1.0,
    decay_u: float = 3.0,
    decay_theta: float = 2.0,
    theta0: float = 1.0,
) -> SpectralState:
    """Draw a state whose coefficients decay algebraically in n.

    Coefficients are uniform on [-amplitude, amplitude] times n^(-decay); u uses ``decay_u``,
    v uses ``decay_u - 1`` and theta uses ``decay_theta``.

    Args:
        params: Supplies the truncation N.
        rng: Seeded generator, e.g. ``numpy.random.default_rng(seed)``.
        amplitude: Scale of the coefficients.
        decay_u: Algebraic decay rate of the displacement coefficients.
        decay_theta: Algebraic decay rate of the temperature coefficients.
        theta0: Mean temperature.

    Example:
        >>> params = ModelParams(mu=1.0, a=1.0, n_modes=4)
        >>> random_state(params, np.random.default_rng(0)).n_modes
        4
    """
    validate_positive("amplitude", amplitude, allow_zero=True)
    n = params.modes
    u, v, theta = rng.uniform(-amplitude, amplitude, (3, params.n_modes))
    u = u * n ** (-decay_u)
    v = v * n ** (1.0 - decay_u)
    theta = theta * n ** (-decay_theta)
    return SpectralState(theta0, u, v, theta)
