"""Mode thresholds and decay rates derived from the per-mode spectra."""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from heatedstring.constants import BOUND_MATRIX_ENTRY, SINGULAR_COND, THRESHOLD_SCAN_WINDOW
from heatedstring.exceptions import DomainError
from heatedstring.linear.eigen import asymptotic_vectors, eigenvalues
from heatedstring.linear.matrices import gershgorin_separated, separation_threshold
from heatedstring.linear.similarity import cinv_leading
from heatedstring.spectral.types import ModelParams
from heatedstring.utils.validate import validate_positive

logger = logging.getLogger("heatedstring.linear")


class ThresholdReport(NamedTuple):
    """Mode threshold N0 and the decay rate alpha for one linearization temperature."""

    N0: int
    """First mode from which the spectral and arithmetic requirements hold."""
    alpha: float
    """min(alpha1, alpha2)."""
    alpha1: float
    """One third of the smallest decay rate -Re lambda among modes n < N0."""
    alpha2: float
    """mu^2 theta_infinity / 4."""
    n0: int
    """Empirical onset of separated, simple spectra."""
    arithmetic_floor: float
    """Largest of the explicit lower bounds on N0."""
    theta_inf: float
    """Linearization temperature used."""


def arithmetic_floor(mu: float, theta_inf: float) -> float:
    """max{sqrt(2 mu^2 theta), 72 (1+theta^2)(1+mu^4), 576 (1+theta^2)(1+mu^4) / (theta mu)}.

    Example:
        >>> arithmetic_floor(1.0, 1.0)
        2304.0
    """
    validate_positive("mu", mu)
    validate_positive("theta_inf", theta_inf)
    weight = (1.0 + theta_inf**2) * (1.0 + mu**4)
    return max(math.sqrt(2.0 * mu**2 * theta_inf), 72.0 * weight, 576.0 * weight / (theta_inf * mu))


def spectral_onset(params: ModelParams, window: int = THRESHOLD_SCAN_WINDOW) -> int:
    """Smallest n such that every mode in [n, n + window) has separated disks and a simple spectrum."""
    n = separation_threshold(params)
    m = n
    while m < n + window:
        lambdas, degenerate = eigenvalues(m, params)
        simple = not degenerate and abs(lambdas[1].imag) > 0 and gershgorin_separated(m, params)
        if simple:
            m += 1
        else:
            n = m = m + 1
    return n


def _spectral_clauses_hold(n: int, params: ModelParams, bound: float) -> bool:
    lambdas, _ = eigenvalues(n, params)
    if np.max(lambdas.real) > -bound:
        return False
    c = asymptotic_vectors(n, params)
    cond = np.linalg.cond(c)
    if not np.isfinite(cond) or cond > SINGULAR_COND:
        return False
    limit = BOUND_MATRIX_ENTRY
    return bool(
        np.max(np.abs(c)) <= limit
        and np.max(np.abs(np.linalg.inv(c))) <= limit
        and np.max(np.abs(cinv_leading(n, params))) <= limit
    )


def slowest_rate(params: ModelParams, n_max: Optional[int] = None) -> float:
    """Smallest -Re lambda over modes 1..n_max (default N) and the three branches."""
    n_max = params.n_modes if n_max is None else n_max
    if n_max < 1:
        raise DomainError(f"invalid mode range 1..{n_max}")
    return float(min(-np.max(eigenvalues(n, params)[0].real) for n in range(1, n_max + 1)))


def thresholds(params: ModelParams, theta_inf: float, window: int = THRESHOLD_SCAN_WINDOW) -> ThresholdReport:
    """Compute N0, alpha1, alpha2 and alpha for the linearization at ``theta_inf``.

    The spectral requirements past N0 are verified on a window of consecutive modes,
    restarting the window after every failure.

    Args:
        params: Supplies mu; its linearization temperature is replaced by ``theta_inf``.
        theta_inf: Limiting mean temperature, positive.
        window: Number of consecutive modes to verify.
    """
    validate_positive("theta_inf", theta_inf)
    lin = params.with_a(theta_inf)
    mu = lin.mu
    alpha2 = mu**2 * theta_inf / 4.0
    n0 = spectral_onset(lin, window)
    floor = arithmetic_floor(mu, theta_inf)
    start = max(n0, int(math.ceil(floor)))
    n = start
    while n < start + window:
        if _spectral_clauses_hold(n, lin, alpha2):
            n += 1
        else:
            start = n = n + 1
    n_zero = start
    if n_zero > 1:
        alpha1 = min(-np.max(eigenvalues(k, lin)[0].real) for k in range(1, n_zero)) / 3.0
    else:
        alpha1 = math.inf
    report = ThresholdReport(
        N0=n_zero,
        alpha=float(min(alpha1, alpha2)),
        alpha1=float(alpha1),
        alpha2=float(alpha2),
        n0=n0,
        arithmetic_floor=float(floor),
        theta_inf=float(theta_inf),
    )
    logger.info("thresholds: N0=%d alpha=%.6g alpha1=%.6g alpha2=%.6g", n_zero, report.alpha, alpha1, alpha2)
    return report
