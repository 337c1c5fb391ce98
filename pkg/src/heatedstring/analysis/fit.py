"""Exponential decay-rate fits of norm time series."""

from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from heatedstring.constants import FIT_WINDOW
from heatedstring.exceptions import DimensionError, DomainError

_MIN_FIT_POINTS = 3


class DecayFit(NamedTuple):
    """Least-squares fit of log(value) = c - rate * t over a time window."""

    window: Tuple[float, float]
    """Fitted time interval (t_lo, t_hi)."""
    fitted_rate: float
    """Minus the fitted slope."""
    r_squared: float
    """Coefficient of determination of the log-linear fit, in [0, 1]."""
    predicted_alpha: float
    """Rate guaranteed by the decay theorem, NaN when not supplied."""
    slowest_mode_rate: float
    """Smallest -Re lambda over the retained modes, NaN when not supplied."""


def default_window(
    times: Sequence[float],
    values: Sequence[float],
    fractions: Tuple[float, float] = FIT_WINDOW,
    floor: Optional[float] = None,
) -> Tuple[float, float]:
    """Fit window as fractions of the run, cut off where ``values`` first reach ``floor``.

    Example:
        >>> default_window([0.0, 1.0, 2.0, 3.0, 4.0], [1.0, 0.5, 0.25, 0.0, 0.0], (0.5, 1.0), floor=0.0)
        (1.0, 2.0)
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    t_start, t_stop = float(times[0]), float(times[-1])
    if floor is not None:
        below = np.nonzero(values <= floor)[0]
        if len(below):
            t_stop = float(times[max(below[0] - 1, 0)])
    span = t_stop - t_start
    return t_start + fractions[0] * span, t_start + fractions[1] * span


def fit_decay(
    times: Sequence[float],
    values: Sequence[float],
    window: Optional[Tuple[float, float]] = None,
    predicted_alpha: float = float("nan"),
    slowest_mode_rate: float = float("nan"),
    floor: Optional[float] = None,
) -> DecayFit:
    """Fit an exponential decay rate to ``values`` sampled at ``times``.

    Args:
        times: Sample times, increasing.
        values: Positive samples on the window.
        window: Closed interval to fit; defaults to ``default_window``.
        predicted_alpha: Reported alongside the fit.
        slowest_mode_rate: Reported alongside the fit.
        floor: Round-off level passed to ``default_window`` when ``window`` is omitted.

    Raises:
        DomainError: If the window holds fewer than three samples or a non-positive value.

    Example:
        >>> t = np.linspace(0.0, 10.0, 101)
        >>> fit = fit_decay(t, np.exp(-0.5 * t))
        >>> round(fit.fitted_rate, 12), round(fit.r_squared, 12)
        (0.5, 1.0)
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.shape != values.shape:
        raise DimensionError(f"times and values differ in shape: {times.shape} vs {values.shape}")
    if window is None:
        window = default_window(times, values, floor=floor)
    t_lo, t_hi = window
    mask = (times >= t_lo) & (times <= t_hi)
    if np.count_nonzero(mask) < _MIN_FIT_POINTS:
        raise DomainError(f"fit window [{t_lo:g}, {t_hi:g}] holds fewer than {_MIN_FIT_POINTS} samples")
    if np.any(values[mask] <= 0) or not np.all(np.isfinite(values[mask])):
        raise DomainError(f"values must be positive and finite on the fit window [{t_lo:g}, {t_hi:g}]")
    t = times[mask]
    logs = np.log(values[mask])
    slope, intercept = np.polyfit(t, logs, 1)
    residual = logs - (slope * t + intercept)
    total = float(np.sum((logs - logs.mean()) ** 2))
    r_squared = 1.0 if total == 0 else 1.0 - float(np.sum(residual**2)) / total
    return DecayFit(
        window=(float(t_lo), float(t_hi)),
        fitted_rate=float(-slope),
        r_squared=float(min(1.0, max(0.0, r_squared))),
        predicted_alpha=float(predicted_alpha),
        slowest_mode_rate=float(slowest_mode_rate),
    )
