"""Exponentially weighted norms on projected trajectories."""

from typing import NamedTuple

import numpy as np

from heatedstring.exceptions import DimensionError
from heatedstring.projections.state import ProjectionState, ProjectionTrajectory
from heatedstring.spectral.types import ModelParams


class XNormReport(NamedTuple):
    """Components of the X-norm of a projected trajectory."""

    u1: float
    """|U_1|_s."""
    u2: float
    """|U_2|_s."""
    u3: float
    """|U_3|_s."""
    theta0_dev: float
    """sup_t |theta0(t) - theta_infinity|."""
    x_norm: float
    """Largest of the four."""


def seq_norm_s(z: np.ndarray, times: np.ndarray, s: float, alpha: float) -> float:
    """sqrt(sum_n n^(2s) sup_t e^(2 alpha t) |z_n(t)|^2) for samples ``z`` of shape (T, N).

    The supremum runs over the sample times, t = 0 included.

    Example:
        >>> seq_norm_s(np.array([[1.0, 0.0], [0.5, 0.0]]), np.array([0.0, 1.0]), 1.0, 0.0)
        1.0
    """
    z = np.asarray(z)
    if z.ndim != 2 or z.shape[0] != len(times):
        raise DimensionError(f"expected samples of shape (T, N) with T={len(times)}, got {z.shape}")
    weighted = np.exp(alpha * np.asarray(times, dtype=float))[:, None] * np.abs(z)
    n = np.arange(1, z.shape[1] + 1, dtype=float)
    return float(np.sqrt(np.sum(n ** (2 * s) * np.max(weighted, axis=0) ** 2)))


def x_norm(trajectory: ProjectionTrajectory, params: ModelParams, alpha: float, theta_inf: float) -> XNormReport:
    """X-norm of the deviation of ``trajectory`` from the equilibrium (0, 0, 0, theta_inf)."""
    parts = [seq_norm_s(trajectory.U[:, :, j], trajectory.times, params.s, alpha) for j in range(3)]
    dev = float(np.max(np.abs(trajectory.theta0 - theta_inf)))
    return XNormReport(parts[0], parts[1], parts[2], dev, max(*parts, dev))


def x_distance(first: ProjectionTrajectory, second: ProjectionTrajectory, s: float, alpha: float) -> float:
    """X-norm of the difference of two trajectories sampled on the same grid."""
    if first.U.shape != second.U.shape:
        raise DimensionError(f"trajectories differ in shape: {first.U.shape} vs {second.U.shape}")
    diff = first.U - second.U
    parts = [seq_norm_s(diff[:, :, j], first.times, s, alpha) for j in range(3)]
    return max(*parts, float(np.max(np.abs(first.theta0 - second.theta0))))


def initial_size(pstate: ProjectionState, params: ModelParams, theta_inf: float) -> float:
    """max{|U_j(0)|_s, |theta0(0) - theta_inf|}, the size of initial data measured for the Picard ball."""
    n = np.arange(1, pstate.n_modes + 1, dtype=float)
    parts = np.sqrt(np.sum(n[:, None] ** (2 * params.s) * np.abs(pstate.U) ** 2, axis=0))
    return float(max(np.max(parts) if parts.size else 0.0, abs(pstate.theta0 - theta_inf)))
