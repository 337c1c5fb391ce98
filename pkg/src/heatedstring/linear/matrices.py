"""Per-mode linear operators and their Gershgorin disks."""

from typing import NamedTuple, NewType, Tuple

import numpy as np

from heatedstring.spectral.types import ModelParams
from heatedstring.utils.validate import validate_mode

ModeMatrix = NewType("ModeMatrix", np.ndarray)
"""3x3 matrix acting on y_n = (n u_n, v_n, theta_n)."""


class GershgorinDisks(NamedTuple):
    """Row Gershgorin disks of a 3x3 matrix."""

    centers: Tuple[complex, complex, complex]
    """Diagonal entries."""
    radii: Tuple[float, float, float]
    """Absolute off-diagonal row sums."""


def build_A(n: int, params: ModelParams) -> ModeMatrix:
    """Linearization A_{n,a} at temperature ``params.a``.

    Example:
        >>> build_A(2, ModelParams(mu=1.0, a=1.0, n_modes=4)).tolist()
        [[0.0, 2.0, 0.0], [-2.0, 0.0, -2.0], [0.0, 2.0, -4.0]]
    """
    validate_mode(n)
    mu, a = params.mu, params.a
    return ModeMatrix(
        np.array(
            [
                [0.0, n, 0.0],
                [-n, 0.0, -mu * n],
                [0.0, a * mu * n, -float(n) ** 2],
            ]
        )
    )


def build_Astar(n: int, params: ModelParams) -> ModeMatrix:
    """Transpose of A_{n,a}; it has the same eigenvalues."""
    return ModeMatrix(build_A(n, params).T.copy())


def char_poly_coeffs(n: int, params: ModelParams) -> Tuple[float, float, float, float]:
    """Coefficients of lambda^3 + n^2 lambda^2 + n^2 (a mu^2 + 1) lambda + n^4, highest degree first."""
    validate_mode(n)
    n2 = float(n) ** 2
    return 1.0, n2, n2 * (params.a * params.mu**2 + 1.0), n2 * n2


def char_poly(n: int, params: ModelParams, lam: complex) -> complex:
    """Evaluate the characteristic polynomial at ``lam`` in Horner form."""
    _, c2, c1, c0 = char_poly_coeffs(n, params)
    return ((lam + c2) * lam + c1) * lam + c0


def gershgorin(n: int, params: ModelParams) -> GershgorinDisks:
    """Row disks of A*_{n,a}.

    Example:
        >>> gershgorin(4, ModelParams(mu=1.0, a=1.0, n_modes=4)).radii
        (4.0, 8.0, 4.0)
    """
    astar = build_Astar(n, params)
    centers = tuple(complex(c) for c in np.diag(astar))
    radii = tuple(float(np.sum(np.abs(row)) - abs(row[i])) for i, row in enumerate(astar))
    return GershgorinDisks(centers, radii)  # type: ignore[arg-type]


def gershgorin_separated(n: int, params: ModelParams) -> bool:
    """Whether the third disk is disjoint from the union of the first two."""
    centers, radii = gershgorin(n, params)
    return all(abs(centers[2] - centers[k]) > radii[2] + radii[k] for k in (0, 1))


def separation_threshold(params: ModelParams) -> int:
    """Smallest n from which the Gershgorin disks stay separated, n > 1 + mu + a mu.

    Example:
        >>> separation_threshold(ModelParams(mu=1.0, a=1.0, n_modes=4))
        4
    """
    n = int(np.floor(1.0 + params.mu + params.a * params.mu)) + 1
    while n > 1 and gershgorin_separated(n - 1, params):
        n -= 1
    while not gershgorin_separated(n, params):
        n += 1
    return n
