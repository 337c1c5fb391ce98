"""Tables comparing exact and leading-order spectra across modes."""

import logging
from typing import Iterable, List, NamedTuple, Sequence

import numpy as np

from heatedstring.constants import SLOPE_TOL
from heatedstring.linear.eigen import asymptotic_eigenvalues, asymptotic_vectors, eigen_exact
from heatedstring.linear.matrices import build_Astar
from heatedstring.linear.similarity import similarity_residual
from heatedstring.spectral.types import ModelParams

logger = logging.getLogger("heatedstring.linear")

DEGENERATE_COUPLINGS = {"err_lambda1": 1.0, "err_lambda2": 4.0, "err_lambda3": 4.0}
"""Values of a mu^2 at which the leading error term of an eigenvalue vanishes and its slope steepens."""


class SpectralRow(NamedTuple):
    """Exact eigenvalues of one mode and the errors of the leading-order forms."""

    n: int
    """Mode index."""
    lambda1: complex
    """Real-branch eigenvalue."""
    lambda2: complex
    """Minus-branch eigenvalue."""
    lambda3: complex
    """Plus-branch eigenvalue."""
    err_lambda1: float
    """|lambda_1 - (-n^2 + a mu^2)|."""
    err_lambda2: float
    """|lambda_2 - (-n i - a mu^2 / 2)|."""
    err_lambda3: float
    """|lambda_3 - (n i - a mu^2 / 2)|."""
    res_v1: float
    """Infinity-norm of A* V_1 - lambda_1 V_1 for the leading-order pair."""
    res_v2: float
    """Same for V_2."""
    res_v3: float
    """Same for V_3."""
    similarity_residual: float
    """Infinity-norm of A* - C D C^{-1}."""
    eigen_condition: float
    """Condition number of the exact eigenvector matrix."""
    degenerate: bool
    """All roots real."""

    def as_dict(self) -> dict:
        """Flatten complex values into real and imaginary columns."""
        out = {}
        for key, value in self._asdict().items():
            if isinstance(value, complex):
                out[f"re_{key}"] = value.real
                out[f"im_{key}"] = value.imag
            else:
                out[key] = value
        return out


class SlopeCheck(NamedTuple):
    """Fitted log-log slope of an error quantity against n."""

    name: str
    """Quantity."""
    slope: float
    """Least-squares slope of log(error) against log(n)."""
    expected: float
    """Predicted slope."""
    tolerance: float
    """Allowed deviation."""

    @property
    def passed(self) -> bool:
        """Whether the fitted slope lies within tolerance of the prediction."""
        return bool(np.isfinite(self.slope) and abs(self.slope - self.expected) <= self.tolerance)


def spectral_row(n: int, params: ModelParams) -> SpectralRow:
    """Compare the exact and leading-order spectra of mode ``n``."""
    exact = eigen_exact(n, params)
    asym = asymptotic_eigenvalues(n, params)
    vectors = asymptotic_vectors(n, params)
    astar = build_Astar(n, params)
    errors = np.abs(exact.lambdas - asym)
    residuals = [float(np.max(np.abs(astar @ vectors[:, j] - asym[j] * vectors[:, j]))) for j in range(3)]
    return SpectralRow(
        n=n,
        lambda1=complex(exact.lambdas[0]),
        lambda2=complex(exact.lambdas[1]),
        lambda3=complex(exact.lambdas[2]),
        err_lambda1=float(errors[0]),
        err_lambda2=float(errors[1]),
        err_lambda3=float(errors[2]),
        res_v1=residuals[0],
        res_v2=residuals[1],
        res_v3=residuals[2],
        similarity_residual=similarity_residual(n, params),
        eigen_condition=float(np.linalg.cond(exact.vectors)),
        degenerate=exact.degenerate,
    )


def spectral_table(params: ModelParams, ns: Iterable[int]) -> List[SpectralRow]:
    """One row per mode in ``ns``."""
    return [spectral_row(int(n), params) for n in ns]


def fit_loglog_slope(ns: Sequence[float], values: Sequence[float]) -> float:
    """Least-squares slope of log(values) against log(ns), ignoring non-positive values."""
    x = np.log(np.asarray(ns, dtype=float))
    y = np.asarray(values, dtype=float)
    keep = y > 0
    if np.count_nonzero(keep) < 2:
        return float("nan")
    return float(np.polyfit(x[keep], np.log(y[keep]), 1)[0])


def asymptotic_slopes(params: ModelParams, ns: Sequence[int], tolerance: float = SLOPE_TOL) -> List[SlopeCheck]:
    """Fitted convergence orders of the leading-order eigenvalues and eigenvectors.

    The real-branch eigenvalue error decays like 1/n^2; the pair eigenvalue errors, the
    eigenvector residuals and the similarity residual decay like 1/n. At the couplings in
    DEGENERATE_COUPLINGS the leading term of an eigenvalue error vanishes and its slope is steeper.
    """
    amu2 = params.a * params.mu**2
    for name, coupling in DEGENERATE_COUPLINGS.items():
        if abs(amu2 - coupling) <= 1e-6 * coupling:
            logger.warning("a mu^2 = %g: leading term of %s vanishes, expect a steeper slope", amu2, name)
    rows = spectral_table(params, ns)
    ns_f = [row.n for row in rows]
    expected = {
        "err_lambda1": -2.0,
        "err_lambda2": -1.0,
        "err_lambda3": -1.0,
        "res_v1": -1.0,
        "res_v2": -1.0,
        "res_v3": -1.0,
        "similarity_residual": -1.0,
    }
    return [
        SlopeCheck(name, fit_loglog_slope(ns_f, [getattr(row, name) for row in rows]), slope, tolerance)
        for name, slope in expected.items()
    ]
