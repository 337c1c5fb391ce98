"""Per-mode projection bases.

Modes n >= n_split use B_n = C_n^T, the transposed leading-order eigenvector matrix, so that the
projected variables U_n = B_n y_n diagonalise the linear part up to the forcing F. Modes below n_split
use the exact eigenvectors of A*_{n,a} when they are well conditioned and an orthogonal real Schur
basis otherwise.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.linalg import schur

from heatedstring.constants import EIGEN_BASIS_MAX_COND, SINGULAR_COND
from heatedstring.exceptions import BasisError, DomainError, handle_exceptions
from heatedstring.linear.eigen import asymptotic_eigenvalues, asymptotic_vectors, eigen_exact
from heatedstring.linear.matrices import build_A, separation_threshold
from heatedstring.spectral.types import ModelParams

logger = logging.getLogger("heatedstring.projections")


class ModeBasis(NamedTuple):
    """Basis matrix of one mode."""

    matrix: np.ndarray
    """B_n; rows are the projection covectors."""
    inverse: np.ndarray
    """B_n^{-1}."""
    kind: str
    """"asymptotic", "eigen" or "schur"."""
    lambdas: Optional[np.ndarray] = None
    """Diagonal of the projected linear part when the basis is an eigenbasis."""


@handle_exceptions(BasisError, np.linalg.LinAlgError)
def invert_checked(matrix: np.ndarray) -> np.ndarray:
    """Inverse of a small matrix, refusing numerically singular input."""
    cond = np.linalg.cond(matrix)
    if not np.isfinite(cond) or cond > SINGULAR_COND:
        raise np.linalg.LinAlgError(f"condition number {cond:.3e} exceeds {SINGULAR_COND:.1e}")
    return np.linalg.inv(matrix)


def mode_basis(n: int, params: ModelParams, n_split: int) -> ModeBasis:
    """Basis of mode ``n`` for the split index ``n_split``."""
    if n >= n_split:
        matrix = asymptotic_vectors(n, params).T.copy()
        return ModeBasis(matrix, invert_checked(matrix), "asymptotic", asymptotic_eigenvalues(n, params))
    exact = eigen_exact(n, params)
    cond = float(np.linalg.cond(exact.vectors))
    if not exact.degenerate and cond <= EIGEN_BASIS_MAX_COND:
        matrix = exact.vectors.T.copy()
        return ModeBasis(matrix, invert_checked(matrix), "eigen", exact.lambdas.copy())
    logger.debug("mode %d: eigenvector condition %.3e, using a Schur basis", n, cond)
    _, q = schur(build_A(n, params), output="real")
    matrix = q.T.astype(complex)
    return ModeBasis(matrix, invert_checked(matrix), "schur")


@dataclass(frozen=True, eq=False)
class ProjectionBasis:
    """Bases for modes 1..N and the linearization they were built for."""

    params: ModelParams
    """Parameters, with ``a`` the linearization temperature."""
    n_split: int
    """First mode using the leading-order basis."""
    modes: Tuple[ModeBasis, ...]
    """One basis per mode, index 0 is mode 1."""

    @property
    def matrices(self) -> np.ndarray:
        """Stacked B_n, shape (N, 3, 3)."""
        return np.stack([mode.matrix for mode in self.modes])

    @property
    def inverses(self) -> np.ndarray:
        """Stacked B_n^{-1}, shape (N, 3, 3)."""
        return np.stack([mode.inverse for mode in self.modes])


def build_basis(params: ModelParams, n_split: Optional[int] = None) -> ProjectionBasis:
    """Projection bases for every retained mode.

    Args:
        params: Parameters; ``params.a`` is the linearization temperature (theta_infinity in the Picard solve).
        n_split: First mode handled by the leading-order scalar equations; defaults to the
            Gershgorin separation threshold.
    """
    if n_split is None:
        n_split = separation_threshold(params)
    if n_split < 1:
        raise DomainError(f"invalid n_split {n_split!r}, expected a positive integer")
    modes = tuple(mode_basis(n, params, n_split) for n in range(1, params.n_modes + 1))
    kinds = [mode.kind for mode in modes]
    logger.debug(
        "basis: n_split=%d, %d eigen, %d schur, %d asymptotic",
        n_split,
        kinds.count("eigen"),
        kinds.count("schur"),
        kinds.count("asymptotic"),
    )
    return ProjectionBasis(params=params, n_split=n_split, modes=modes)
