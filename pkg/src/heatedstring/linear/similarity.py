"""The similarity A*_{n,a} = C_n D_n C_n^{-1} built from the leading-order eigenvectors."""

from typing import NamedTuple

import numpy as np

from heatedstring.constants import SINGULAR_COND
from heatedstring.exceptions import SingularityError, handle_exceptions
from heatedstring.linear.eigen import asymptotic_eigenvalues, asymptotic_vectors
from heatedstring.linear.matrices import build_A, build_Astar
from heatedstring.spectral.types import ModelParams
from heatedstring.utils.validate import validate_mode


class SimilarityTriple(NamedTuple):
    """C_n, D_n and the exact inverse of C_n."""

    C: np.ndarray
    """Columns V_1, V_2, V_3."""
    D: np.ndarray
    """Diagonal matrix of the leading-order eigenvalues."""
    C_inv: np.ndarray
    """Numerical inverse of C."""


class LyapunovCheck(NamedTuple):
    """Weighted energy E_n(y) = y_1^2 + y_2^2 + y_3^2 / a and its rate along y' = A_{n,a} y."""

    energy: float
    """E_n(y)."""
    rate: float
    """d/dt E_n(y) computed from A_{n,a} y."""
    expected: float
    """-2 n^2 y_3^2 / a."""


@handle_exceptions(SingularityError, np.linalg.LinAlgError)
def similarity(n: int, params: ModelParams) -> SimilarityTriple:
    """Leading-order similarity triple of A*_{n,a}.

    Raises:
        SingularityError: If C_n is numerically singular (small n with large a mu).
    """
    validate_mode(n)
    c = asymptotic_vectors(n, params)
    cond = np.linalg.cond(c)
    if not np.isfinite(cond) or cond > SINGULAR_COND:
        raise np.linalg.LinAlgError(f"condition number {cond:.3e} exceeds {SINGULAR_COND:.1e}")
    return SimilarityTriple(c, np.diag(asymptotic_eigenvalues(n, params)), np.linalg.inv(c))


def similarity_residual(n: int, params: ModelParams) -> float:
    """Infinity-norm of A*_{n,a} - C_n D_n C_n^{-1}; of order 1/n."""
    triple = similarity(n, params)
    diff = build_Astar(n, params) - triple.C @ triple.D @ triple.C_inv
    return float(np.max(np.sum(np.abs(diff), axis=1)))


def cinv_leading(n: int, params: ModelParams) -> np.ndarray:
    """Leading-order closed form of C_n^{-1}."""
    validate_mode(n)
    mu, a = params.mu, params.a
    nf = float(n)
    row2 = np.array([0.5 + a * mu**2 * 1j / (4.0 * nf), -0.5j, -a * mu * 1j / (2.0 * nf)])
    return np.array(
        [
            [-mu / nf**2, mu / nf, 1.0 + 2.0 * a * mu**2 / nf**2],
            row2,
            np.conj(row2),
        ],
        dtype=complex,
    )


def lyapunov_rate_check(n: int, params: ModelParams, y: np.ndarray) -> LyapunovCheck:
    """Evaluate the weighted energy identity d/dt E_n = -2 n^2 y_3^2 / a at ``y``."""
    y = np.asarray(y, dtype=float)
    weights = np.array([1.0, 1.0, 1.0 / params.a])
    rate = float(2.0 * np.sum(weights * y * (build_A(n, params) @ y)))
    return LyapunovCheck(
        energy=float(np.sum(weights * y**2)),
        rate=rate,
        expected=-2.0 * float(n) ** 2 * y[2] ** 2 / params.a,
    )
