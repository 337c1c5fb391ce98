"""Energy and weighted Sobolev norms of spectral states."""

import logging
from typing import Optional

import numpy as np

from heatedstring.exceptions import DomainError
from heatedstring.spectral.transform import synthesize, synthesize_slope, trapezoid_weights
from heatedstring.spectral.types import ModelParams, NormRecord, SpectralState

logger = logging.getLogger("heatedstring.spectral")


def wave_energy(state: SpectralState) -> float:
    """Mechanical part of the energy, (pi/4) sum (v_n^2 + n^2 u_n^2)."""
    n = np.arange(1, state.n_modes + 1, dtype=float)
    return 0.25 * np.pi * float(np.sum(state.v**2) + np.sum((n * state.u) ** 2))


def energy(state: SpectralState) -> float:
    """Total energy: integral of u_t^2/2 + u_x^2/2 + theta over [0, pi].

    Example:
        >>> round(energy(SpectralState(1.0, [1.0], [0.0], [0.0])), 6)
        3.926991
    """
    return wave_energy(state) + np.pi * state.theta0


def theta_infinity(state: SpectralState) -> float:
    """Limiting mean temperature E / pi.

    Example:
        >>> round(theta_infinity(SpectralState(1.0, [1.0], [0.0], [0.0])), 12)
        1.25
    """
    return energy(state) / np.pi


def heat_fraction(state: SpectralState) -> float:
    """Share of the total energy carried by heat, pi theta0 / E."""
    total = energy(state)
    if total == 0:
        raise DomainError("heat fraction is undefined for zero energy")
    return np.pi * state.theta0 / total


def hs_seminorm(coeffs: np.ndarray, s: float) -> float:
    """Weighted seminorm sqrt(sum n^(2s) |c_n|^2), n starting at 1.

    Example:
        >>> hs_seminorm(np.array([0.0, 1.0]), 1.0)
        2.0
    """
    if s < 0:
        raise DomainError(f"invalid Sobolev index {s!r}, expected s >= 0")
    coeffs = np.asarray(coeffs)
    n = np.arange(1, len(coeffs) + 1, dtype=float)
    return float(np.sqrt(np.sum(n ** (2 * s) * np.abs(coeffs) ** 2)))


def min_temperature(state: SpectralState, params: ModelParams) -> float:
    """Minimum of the synthesized temperature on the grid."""
    return float(np.min(synthesize(state, params).theta))


def quadrature_energy(state: SpectralState, params: ModelParams) -> float:
    """Energy computed from grid samples with the trapezoid rule.

    Exact on the retained modes when M >= 2N + 1; used to cross-check the Parseval form.
    """
    field = synthesize(state, params)
    slope = synthesize_slope(state, params)
    density = 0.5 * field.u_t**2 + 0.5 * slope**2 + field.theta
    return float(trapezoid_weights(params.grid_points) @ density)


def norm_record(
    state: SpectralState,
    params: ModelParams,
    t: float,
    theta_inf: float,
    with_min_theta: bool = True,
) -> NormRecord:
    """Diagnostics of ``state`` at time ``t`` relative to ``theta_inf``."""
    n = params.modes
    min_theta: Optional[float] = min_temperature(state, params) if with_min_theta else None
    return NormRecord(
        t=float(t),
        energy=energy(state),
        hs_u_x=hs_seminorm(n * state.u, params.s),
        hs_u_t=hs_seminorm(state.v, params.s),
        hs_theta_dev=hs_seminorm(state.theta, params.s),
        theta0_dev=abs(state.theta0 - theta_inf),
        min_theta=min_theta,
    )
