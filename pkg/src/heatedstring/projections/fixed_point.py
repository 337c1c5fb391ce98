"""Picard iteration of the Duhamel map and empirical contraction diagnostics."""

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Union

import numpy as np

from heatedstring.constants import PICARD_DIVERGENCE_STREAK, PICARD_MAX_ITER, PICARD_TOL
from heatedstring.exceptions import DivergenceError, DomainError
from heatedstring.linear.thresholds import thresholds
from heatedstring.projections.basis import ProjectionBasis, build_basis
from heatedstring.projections.duhamel import duhamel_map
from heatedstring.projections.norms import initial_size, x_distance
from heatedstring.projections.state import ProjectionState, ProjectionTrajectory, to_projection
from heatedstring.spectral.norms import wave_energy
from heatedstring.spectral.types import ModelParams, SpectralState
from heatedstring.utils.validate import validate_positive

logger = logging.getLogger("heatedstring.projections.fixed_point")


class IterationRecord(NamedTuple):
    """One Picard step."""

    iteration: int
    """1-based iteration count."""
    x_norm_diff: float
    """X-distance between this iterate and the previous one."""
    ratio: float
    """x_norm_diff divided by the previous x_norm_diff; NaN for the first step."""


@dataclass(frozen=True, eq=False)
class FixedPointResult:
    """Outcome of a converged Picard solve."""

    trajectory: ProjectionTrajectory
    """Final iterate."""
    basis: ProjectionBasis
    """Bases used by the Duhamel map."""
    alpha: float
    """Exponential weight of the X-norm."""
    history: List[IterationRecord] = field(default_factory=list)
    """Iteration log."""

    @property
    def iterations(self) -> int:
        """Number of Duhamel map applications."""
        return len(self.history)

    @property
    def max_ratio(self) -> float:
        """Largest observed contraction ratio, NaN if fewer than two iterations ran."""
        ratios = [rec.ratio for rec in self.history if np.isfinite(rec.ratio)]
        return float(max(ratios)) if ratios else float("nan")


class RadiusProbe(NamedTuple):
    """Picard behaviour for one scaled initial datum."""

    size: float
    """Initial size max{|U_j(0)|_s, |theta0(0) - theta_inf|}."""
    converged: bool
    """Whether the iteration converged."""
    iterations: int
    """Iterations used."""
    max_ratio: float
    """Largest contraction ratio seen."""


def fixed_point_solve(
    initial: Union[SpectralState, ProjectionState],
    params: ModelParams,
    theta_inf: float,
    t_end: float,
    h: float,
    tol: float = PICARD_TOL,
    n_split: Optional[int] = None,
    alpha: Optional[float] = None,
    max_iter: int = PICARD_MAX_ITER,
) -> FixedPointResult:
    """Iterate the Duhamel map from the constant trajectory until successive iterates agree.

    Args:
        initial: Initial data, spectral or already projected.
        params: Model parameters.
        theta_inf: Linearization temperature, normally theta_infinity of ``initial``.
        t_end: Length of the time window.
        h: Sample spacing.
        tol: Stop once the X-distance between iterates drops below ``tol``.
        n_split: First mode treated by the scalar equations; defaults to the separation threshold.
        alpha: Exponential weight of the X-norm; defaults to the alpha of ``thresholds``.
        max_iter: Iteration cap.

    Raises:
        DivergenceError: If the contraction ratio is at least one for three consecutive steps,
            or if ``max_iter`` iterations do not reach ``tol``.
    """
    validate_positive("t_end", t_end)
    validate_positive("h", h)
    lin = params.with_a(theta_inf)
    basis = build_basis(lin, n_split)
    if alpha is None:
        alpha = thresholds(params, theta_inf).alpha
    if isinstance(initial, SpectralState):
        initial = to_projection(initial, lin, basis)
    steps = int(round(t_end / h))
    if steps < 1 or not np.isclose(steps * h, t_end, rtol=1e-9):
        raise DomainError(f"t_end={t_end!r} is not a whole multiple of h={h!r}")
    times = np.linspace(0.0, t_end, steps + 1)
    current = ProjectionTrajectory.constant(initial, times)

    history: List[IterationRecord] = []
    previous_diff: Optional[float] = None
    streak = 0
    for iteration in range(1, max_iter + 1):
        nxt = duhamel_map(current, initial, lin, theta_inf, basis)
        diff = x_distance(nxt, current, lin.s, alpha)
        ratio = diff / previous_diff if previous_diff else float("nan")
        history.append(IterationRecord(iteration, diff, ratio))
        logger.debug("picard iteration %d: distance=%.3e ratio=%.3g", iteration, diff, ratio)
        current = nxt
        if diff < tol:
            logger.info("picard converged after %d iterations (distance %.3e)", iteration, diff)
            return FixedPointResult(current, basis, float(alpha), history)
        streak = streak + 1 if np.isfinite(ratio) and ratio >= 1.0 else 0
        if streak >= PICARD_DIVERGENCE_STREAK or not np.isfinite(diff):
            raise DivergenceError(
                f"picard iteration stopped contracting at iteration {iteration}",
                ratios=[rec.ratio for rec in history],
            )
        previous_diff = diff
    raise DivergenceError(
        f"picard iteration did not reach tolerance {tol:g} within {max_iter} iterations",
        ratios=[rec.ratio for rec in history],
    )


def scaled_initial(state: SpectralState, theta_inf: float, factor: float) -> SpectralState:
    """Scale the deviation of ``state`` from equilibrium and reset theta0 so that theta_inf is unchanged."""
    u, v, theta = factor * state.u, factor * state.v, factor * state.theta
    scaled = SpectralState(theta_inf, u, v, theta)
    return SpectralState(theta_inf - wave_energy(scaled) / np.pi, u, v, theta)


def empirical_radius(
    initial: SpectralState,
    params: ModelParams,
    theta_inf: float,
    t_end: float,
    h: float,
    sizes: Sequence[float],
    n_split: Optional[int] = None,
    alpha: Optional[float] = None,
    tol: float = PICARD_TOL,
    max_iter: int = PICARD_MAX_ITER,
) -> List[RadiusProbe]:
    """Run the Picard solve on rescaled copies of ``initial`` with the requested initial sizes."""
    lin = params.with_a(theta_inf)
    basis = build_basis(lin, n_split)
    if alpha is None:
        alpha = thresholds(params, theta_inf).alpha
    reference = initial_size(to_projection(initial, lin, basis), lin, theta_inf)
    if reference == 0:
        raise DomainError("initial data coincide with the equilibrium; nothing to rescale")
    probes = []
    for size in sorted(sizes):
        candidate = scaled_initial(initial, theta_inf, size / reference)
        actual = initial_size(to_projection(candidate, lin, basis), lin, theta_inf)
        try:
            result = fixed_point_solve(
                candidate, params, theta_inf, t_end, h, tol=tol, n_split=basis.n_split, alpha=alpha, max_iter=max_iter
            )
        except DivergenceError as exc:
            finite = [r for r in exc.ratios if np.isfinite(r)]
            probes.append(RadiusProbe(actual, False, len(exc.ratios), float(max(finite)) if finite else float("nan")))
            continue
        probes.append(RadiusProbe(actual, True, result.iterations, result.max_ratio))
    return probes
