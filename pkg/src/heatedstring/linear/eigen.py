"""Exact and asymptotic eigen-decomposition of the per-mode operator A*_{n,a}.

The characteristic polynomial lambda^3 + n^2 lambda^2 + n^2 (a mu^2 + 1) lambda + n^4 is solved in closed form
on the rescaled variable z = lambda / n^2, then every root is polished by Newton's method on the unscaled
polynomial. For the usual parameters there is one real root near -n^2 (the real branch) and a conjugate pair
near -/+ n i (the minus and plus branches).
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from heatedstring.constants import NEWTON_MAX_ITER, NEWTON_RESIDUAL_TOL, REAL_ROOT_TOL
from heatedstring.exceptions import ConditioningError
from heatedstring.linear.matrices import build_Astar, char_poly_coeffs
from heatedstring.spectral.types import ModelParams
from heatedstring.utils.validate import validate_mode

logger = logging.getLogger("heatedstring.linear")

BRANCHES: Tuple[str, str, str] = ("real-branch", "minus-branch", "plus-branch")
"""Eigenvalue labels, in the order lambda_1, lambda_2, lambda_3."""

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigenvalues and eigenvectors of A*_{n,a}.

    ``vectors[:, j]`` belongs to ``lambdas[j]``. The real-branch vector is scaled to third entry 1,
    the pair vectors to first entry 1.
    """

    n: int
    """Mode index."""
    lambdas: np.ndarray
    """Eigenvalues (lambda_1, lambda_2, lambda_3)."""
    vectors: np.ndarray
    """Eigenvectors as columns."""
    labels: Tuple[str, str, str] = BRANCHES
    """Branch label of every eigenvalue."""
    degenerate: bool = False
    """True when all three roots are real and the branch labels are only an ordering."""

    @property
    def max_real_part(self) -> float:
        """Largest real part of the three eigenvalues."""
        return float(np.max(self.lambdas.real))


def _cardano(c2: complex, c1: complex, c0: complex) -> np.ndarray:
    """Roots of x^3 + c2 x^2 + c1 x + c0 by the complex Cardano formula."""
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    root_disc = np.sqrt(complex(0.25 * q * q + p**3 / 27.0))
    big = -0.5 * q + root_disc
    if abs(-0.5 * q - root_disc) > abs(big):
        big = -0.5 * q - root_disc
    if big == 0:
        return np.full(3, -c2 / 3.0, dtype=complex)
    cube = big ** (1.0 / 3.0)
    omega = np.exp(2j * np.pi / 3.0)
    roots = [cube * omega**k - p / (3.0 * cube * omega**k) for k in range(3)]
    return np.array(roots, dtype=complex) - c2 / 3.0


def _polish(coeffs: Tuple[float, float, float, float], x: complex, n: int) -> Tuple[complex, float]:
    """Newton iteration on the cubic; returns the root and its residual |p(root)|."""
    _, c2, c1, c0 = coeffs
    tol = NEWTON_RESIDUAL_TOL * max(1.0, float(n) ** 4)
    at_precision = False
    for _ in range(NEWTON_MAX_ITER):
        value = ((x + c2) * x + c1) * x + c0
        if abs(value) <= 1e-3 * tol:
            break
        slope = (3.0 * x + 2.0 * c2) * x + c1
        if slope == 0:
            break
        step = value / slope
        x = x - step
        if abs(step) <= 4.0 * _EPS * abs(x):
            at_precision = True
            break
    residual = abs(((x + c2) * x + c1) * x + c0)
    if residual > tol and not at_precision:
        raise ConditioningError(
            f"Newton polishing failed for n={n}: |p(lambda)|={residual:.3e} exceeds {tol:.3e}",
            diagnostics={"n": n, "root": complex(x), "residual": residual, "tolerance": tol},
        )
    return x, residual


def eigenvalues(n: int, params: ModelParams) -> Tuple[np.ndarray, bool]:
    """Polished roots of the characteristic polynomial, ordered (real, minus, plus).

    Returns:
        The three roots and the degeneracy flag. When all roots are real the one nearest -n^2
        comes first and the other two follow by real part.
    """
    validate_mode(n)
    coeffs = char_poly_coeffs(n, params)
    _, c2, c1, c0 = coeffs
    n2 = float(n) ** 2
    guesses = n2 * _cardano(1.0, c1 / (n2 * n2), c0 / (n2 * n2 * n2))
    scale = float(np.max(np.abs(guesses)))
    real_mask = np.abs(guesses.imag) <= REAL_ROOT_TOL * scale
    if np.count_nonzero(real_mask) != 1:
        # Cardano can return three nearly-real roots; recount after polishing.
        real_mask = np.abs(guesses.imag) <= np.sqrt(REAL_ROOT_TOL) * scale
    if np.count_nonzero(real_mask) == 1:
        real_root, _ = _polish(coeffs, float(guesses[real_mask][0].real), n)
        real_root = float(np.real(real_root))
        pair_sum = -c2 - real_root
        pair_product = -c0 / real_root
        disc = pair_sum * pair_sum - 4.0 * pair_product
        if disc < 0:
            guess = complex(0.5 * pair_sum, -0.5 * np.sqrt(-disc))
            minus, _ = _polish(coeffs, guess, n)
            minus = complex(minus.real, -abs(minus.imag))
            return np.array([real_root, minus, np.conj(minus)], dtype=complex), False
    roots = sorted(float(_polish(coeffs, float(g.real), n)[0].real) for g in guesses)
    real_root = roots.pop(int(np.argmin([abs(root + n2) for root in roots])))
    logger.warning(
        "all eigenvalues of A*_{n,a} are real for n=%d; real branch nearest -n^2, others by real part",
        n,
    )
    return np.array([real_root, *roots], dtype=complex), True


def _null_vector(matrix: np.ndarray) -> np.ndarray:
    """Null vector of a rank-two 3x3 matrix from the cross product of its two most independent rows."""
    candidates = [np.cross(matrix[i], matrix[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    return max(candidates, key=lambda vec: float(np.linalg.norm(vec)))


def _normalize(vec: np.ndarray, index: int) -> np.ndarray:
    norm = float(np.linalg.norm(vec))
    if abs(vec[index]) > 1e-14 * norm:
        return vec / vec[index]
    return vec / norm


def eigen_exact(n: int, params: ModelParams) -> EigenSystem:
    """Exact eigenvalues and eigenvectors of A*_{n,a}.

    Raises:
        ConditioningError: If a root cannot be polished to |p(lambda)| <= 1e-9 max(1, n^4).

    Example:
        >>> system = eigen_exact(1, ModelParams(mu=1.0, a=1.0, n_modes=1))
        >>> round(float(system.lambdas[0].real), 4), round(float(system.lambdas[1].real), 4)
        (-0.5698, -0.2151)
    """
    lambdas, degenerate = eigenvalues(n, params)
    astar = build_Astar(n, params).astype(complex)
    vectors = np.empty((3, 3), dtype=complex)
    for j, lam in enumerate(lambdas):
        vec = _null_vector(astar - lam * np.eye(3))
        vectors[:, j] = _normalize(vec, 2 if j == 0 and not degenerate else 0)
    if not degenerate:
        vectors[:, 2] = np.conj(vectors[:, 1])
    return EigenSystem(n=n, lambdas=lambdas, vectors=vectors, degenerate=degenerate)


def asymptotic_eigenvalues(n: int, params: ModelParams) -> np.ndarray:
    """Leading-order eigenvalues (-n^2 + a mu^2, -n i - a mu^2 / 2, n i - a mu^2 / 2)."""
    validate_mode(n)
    amu2 = params.a * params.mu**2
    return np.array([-(float(n) ** 2) + amu2, complex(-0.5 * amu2, -n), complex(-0.5 * amu2, n)])


def asymptotic_vectors(n: int, params: ModelParams) -> np.ndarray:
    """Leading-order eigenvectors V_1, V_2, V_3 as the columns of C_n."""
    validate_mode(n)
    mu, a = params.mu, params.a
    nf = float(n)
    v1 = np.array([-a * mu / nf**2, -a * mu / nf, 1.0 - a * mu**2 / nf**2], dtype=complex)
    v2 = np.array(
        [
            1.0,
            1j + a * mu**2 / (2.0 * nf),
            -mu * 1j / nf + mu / nf**2 - a * mu**3 / (2.0 * nf**2),
        ],
        dtype=complex,
    )
    return np.stack((v1, v2, np.conj(v2)), axis=1)


def eigen_asymptotic(n: int, params: ModelParams) -> EigenSystem:
    """Leading-order eigen-decomposition; accurate for n past the Gershgorin separation threshold."""
    return EigenSystem(n=n, lambdas=asymptotic_eigenvalues(n, params), vectors=asymptotic_vectors(n, params))


def eigen_condition(n: int, params: ModelParams) -> float:
    """2-norm condition number of the exact eigenvector matrix."""
    return float(np.linalg.cond(eigen_exact(n, params).vectors))
