"""Initial-condition presets.

These are the lab's own test data: smooth, with u_n = O(n^-3) and theta_n = O(n^-2) or faster.
"""

import logging

import numpy as np

from heatedstring.analysis.config import InitialSpec
from heatedstring.exceptions import ConfigError, DimensionError, DomainError
from heatedstring.integrator.io import load_snapshot
from heatedstring.projections.basis import build_basis
from heatedstring.projections.fixed_point import scaled_initial
from heatedstring.projections.norms import initial_size
from heatedstring.projections.state import to_projection
from heatedstring.spectral.norms import theta_infinity
from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.transform import analyze, grid
from heatedstring.spectral.types import GridField, ModelParams, SpectralState

logger = logging.getLogger("heatedstring.analysis.cli")

_SIZE_PASSES = 3


def bump_profile(x: np.ndarray, center: float, width: float) -> np.ndarray:
    """exp(1 - 1 / (1 - r^2)) for |r| < 1 with r = (x - center) / width, zero elsewhere; peak value 1."""
    r = (np.asarray(x, dtype=float) - center) / width
    inside = np.abs(r) < 1
    out = np.zeros_like(r)
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - r[inside] ** 2))
    return out


def _padded(name: str, values: tuple, n_modes: int) -> np.ndarray:
    if len(values) > n_modes:
        raise DimensionError(f"fourier preset gives {len(values)} {name} coefficients for {n_modes} modes")
    out = np.zeros(n_modes)
    out[: len(values)] = values
    return out


def _bump(spec: InitialSpec, params: ModelParams) -> SpectralState:
    if spec.width <= 0 or spec.center - spec.width < 0 or spec.center + spec.width > np.pi:
        raise DomainError(f"bump [{spec.center - spec.width:g}, {spec.center + spec.width:g}] must lie inside [0, pi]")
    x = grid(params)
    profile = bump_profile(x, spec.center, spec.width)
    field = GridField(x, spec.amplitude * profile, np.zeros_like(x), spec.theta0 + spec.heat * profile)
    return analyze(field, params)


def _small_data(spec: InitialSpec, params: ModelParams) -> SpectralState:
    base = random_state(params, np.random.default_rng(spec.seed), 1.0, spec.decay_u, spec.decay_theta, spec.theta0)
    theta_inf = spec.theta0
    lin = params.with_a(theta_inf)
    basis = build_basis(lin)
    state = scaled_initial(base, theta_inf, 1.0)
    for _ in range(_SIZE_PASSES):
        current = initial_size(to_projection(state, lin, basis), lin, theta_inf)
        state = scaled_initial(state, theta_inf, spec.size / current)
    return state


def initial_state(spec: InitialSpec, params: ModelParams) -> SpectralState:
    """Build the initial state named by ``spec``.

    Args:
        spec: Preset and options.
        params: Supplies N and the grid.

    Raises:
        ConfigError: If the preset options are inconsistent with ``params``.

    Example:
        >>> params = ModelParams(mu=1.0, a=1.0, n_modes=3)
        >>> initial_state(InitialSpec(preset="fourier", u=(0.5,)), params).u.tolist()
        [0.5, 0.0, 0.0]
    """
    try:
        state = _build(spec, params)
    except (DimensionError, DomainError) as exc:
        raise ConfigError(f"invalid [initial] for preset {spec.preset!r}: {exc}") from exc
    logger.debug("initial state %s: theta_inf=%.12g", spec.preset, theta_infinity(state))
    return state


def _build(spec: InitialSpec, params: ModelParams) -> SpectralState:
    n_modes = params.n_modes
    if spec.preset == "equilibrium":
        return SpectralState.zeros(n_modes, spec.theta0)
    if spec.preset == "fourier":
        return SpectralState(
            spec.theta0,
            _padded("u", spec.u, n_modes),
            _padded("v", spec.v, n_modes),
            _padded("theta", spec.theta, n_modes),
        )
    if spec.preset == "bump":
        return _bump(spec, params)
    if spec.preset == "random-smooth":
        rng = np.random.default_rng(spec.seed)
        return random_state(params, rng, spec.amplitude, spec.decay_u, spec.decay_theta, spec.theta0)
    if spec.preset == "small-data":
        if spec.size <= 0:
            raise DomainError(f"small-data size must be positive, got {spec.size!r}")
        return _small_data(spec, params)
    if spec.preset == "single-mode":
        if not 1 <= spec.mode <= n_modes:
            raise DomainError(f"mode {spec.mode} is outside 1..{n_modes}")
        theta = np.zeros(n_modes)
        theta[spec.mode - 1] = spec.amplitude
        return SpectralState(spec.theta0, np.zeros(n_modes), np.zeros(n_modes), theta)
    if spec.preset == "snapshot":
        if spec.snapshot is None:
            raise DomainError("the snapshot preset needs [initial] snapshot = <path>")
        state = load_snapshot(spec.snapshot).state
        if state.n_modes != n_modes:
            raise DimensionError(f"snapshot holds {state.n_modes} modes, [model] n_modes is {n_modes}")
        return state
    raise DomainError(f"unknown preset {spec.preset!r}")
