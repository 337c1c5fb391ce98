"""Matrix exponential and the phi functions used by exponential quadrature.

phi1(z) = (e^z - 1) / z and phi2(z) = (e^z - 1 - z) / z^2. For a step h and a forcing that is linear
between two samples F_k and F_{k+1}, the exact solution of x' = lam x + F(t) satisfies

    x_{k+1} = e^{lam h} x_k + h [(phi1 - phi2)(lam h) F_k + phi2(lam h) F_{k+1}].
"""

import math
from typing import Tuple

import numpy as np

from heatedstring.constants import PADE_DEGREE, PADE_SCALING_NORM, PHI_SERIES_RADIUS, PHI_SERIES_TERMS


def phi_functions(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Elementwise phi1 and phi2, switching to the Taylor series near zero.

    Example:
        >>> phi1, phi2 = phi_functions(np.array([0.0]))
        >>> float(phi1[0]), float(phi2[0])
        (1.0, 0.5)
    """
    z = np.asarray(z)
    dtype = np.result_type(z, float)
    phi1 = np.empty(z.shape, dtype=dtype)
    phi2 = np.empty(z.shape, dtype=dtype)
    small = np.abs(z) < PHI_SERIES_RADIUS
    zs = z[small]
    series1 = np.zeros(zs.shape, dtype=dtype)
    series2 = np.zeros(zs.shape, dtype=dtype)
    power = np.ones(zs.shape, dtype=dtype)
    for k in range(PHI_SERIES_TERMS):
        series1 = series1 + power / math.factorial(k + 1)
        series2 = series2 + power / math.factorial(k + 2)
        power = power * zs
    phi1[small] = series1
    phi2[small] = series2
    zl = z[~small]
    expm1 = np.expm1(zl) if not np.iscomplexobj(zl) else np.exp(zl) - 1.0
    phi1[~small] = expm1 / zl
    phi2[~small] = (expm1 - zl) / zl**2
    return phi1, phi2


def _pade_coefficients(degree: int) -> np.ndarray:
    q = degree
    numer = [math.factorial(2 * q - k) * math.factorial(q) for k in range(q + 1)]
    denom = [math.factorial(2 * q) * math.factorial(k) * math.factorial(q - k) for k in range(q + 1)]
    return np.array(numer, dtype=float) / np.array(denom, dtype=float)


def expm(matrix: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a diagonal Pade approximant.

    Example:
        >>> bool(np.allclose(expm(np.zeros((2, 2))), np.eye(2)))
        True
    """
    matrix = np.asarray(matrix)
    size = matrix.shape[0]
    norm = float(np.max(np.sum(np.abs(matrix), axis=0))) if size else 0.0
    squarings = max(0, int(math.ceil(math.log2(norm / PADE_SCALING_NORM)))) if norm > PADE_SCALING_NORM else 0
    scaled = matrix / 2.0**squarings
    coeffs = _pade_coefficients(PADE_DEGREE)
    identity = np.eye(size, dtype=np.result_type(matrix, float))
    numer = coeffs[0] * identity
    denom = coeffs[0] * identity
    power = identity
    for k in range(1, PADE_DEGREE + 1):
        power = power @ scaled
        numer = numer + coeffs[k] * power
        denom = denom + (-1) ** k * coeffs[k] * power
    result = np.linalg.solve(denom, numer)
    for _ in range(squarings):
        result = result @ result
    return result


def expm_phi(matrix: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """e^{hA}, phi1(hA) and phi2(hA) from one exponential of an augmented block matrix.

    The exponential of [[hA, I, 0], [0, 0, I], [0, 0, 0]] carries e^{hA}, phi1(hA) and phi2(hA)
    in its first block row.
    """
    matrix = np.asarray(matrix)
    size = matrix.shape[0]
    block = np.zeros((3 * size, 3 * size), dtype=np.result_type(matrix, float))
    block[:size, :size] = h * matrix
    block[:size, size : 2 * size] = np.eye(size)
    block[size : 2 * size, 2 * size :] = np.eye(size)
    full = expm(block)
    return full[:size, :size], full[:size, size : 2 * size], full[:size, 2 * size :]
