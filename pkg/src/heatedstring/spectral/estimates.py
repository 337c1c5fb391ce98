"""Discrete convolutions and the weighted sequence estimates built on them.

Sequences are indexed from 1: entry ``a[k - 1]`` holds a_k. Entries past the end count as zero.
"""

from typing import NamedTuple, Sequence, Union

import numpy as np

from heatedstring.constants import WEIGHTED_SUM_TAIL_CUTOFF
from heatedstring.exceptions import DivergentSeriesError, DomainError, DimensionError
from heatedstring.utils.validate import validate_mode

Scalar = Union[float, complex]


class EstimateSides(NamedTuple):
    """Left and right hand side of an inequality."""

    lhs: float
    """Quantity being bounded."""
    rhs: float
    """The bound."""

    @property
    def holds(self) -> bool:
        """Whether lhs <= rhs up to round-off."""
        return self.lhs <= self.rhs * (1.0 + 1e-12) + 1e-300


def _as_array(values: Sequence[Scalar]) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise DimensionError(f"expected a one-dimensional sequence, got shape {arr.shape}")
    return arr


def cauchy_all(a: np.ndarray, b: np.ndarray, n_max: int) -> np.ndarray:
    """Values of sum_{k=1}^{n-1} a_{n-k} b_k for n = 1..n_max."""
    out = np.zeros(n_max, dtype=np.result_type(a, b, float))
    if len(a) == 0 or len(b) == 0 or n_max < 2:
        return out
    full = np.convolve(a, b)
    count = min(n_max - 1, len(full))
    out[1 : count + 1] = full[:count]
    return out


def tail_all(a: np.ndarray, b: np.ndarray, n_max: int) -> np.ndarray:
    """Values of sum_{l>=1} a_{l+n} b_l for n = 1..n_max."""
    out = np.zeros(n_max, dtype=np.result_type(a, b, float))
    if len(a) == 0 or len(b) == 0:
        return out
    full = np.convolve(a, b[::-1])
    offset = len(b) - 1
    count = min(n_max, len(a) - 1)
    if count > 0:
        out[:count] = full[offset + 1 : offset + 1 + count]
    return out


def conv_cauchy(a: Sequence[Scalar], b: Sequence[Scalar], n: int) -> Scalar:
    """Finite Cauchy sum sum_{k=1}^{n-1} a_{n-k} b_k.

    Example:
        >>> float(conv_cauchy([1.0, 1.0, 1.0], [1.0, 1.0, 1.0], 3))
        2.0
    """
    validate_mode(n)
    a_arr, b_arr = _as_array(a), _as_array(b)
    k = np.arange(1, n)
    k = k[(k <= len(b_arr)) & (n - k <= len(a_arr))]
    return np.dot(a_arr[n - k - 1], b_arr[k - 1]) if len(k) else 0.0


def conv_tail_left(a: Sequence[Scalar], b: Sequence[Scalar], n: int, length: int) -> Scalar:
    """Truncated tail sum sum_{l=1}^{L} a_{l+n} l b_l.

    Example:
        >>> float(conv_tail_left([1.0, 2.0, 3.0], [1.0, 1.0, 1.0], 1, 2))
        8.0
    """
    validate_mode(n)
    a_arr, b_arr = _as_array(a), _as_array(b)
    ell = np.arange(1, length + 1)
    ell = ell[(ell <= len(b_arr)) & (ell + n <= len(a_arr))]
    return np.dot(a_arr[ell + n - 1], ell * b_arr[ell - 1]) if len(ell) else 0.0


def conv_tail_right(a: Sequence[Scalar], b: Sequence[Scalar], n: int, length: int) -> Scalar:
    """Truncated tail sum sum_{l=1}^{L} a_l (l+n) b_{l+n}."""
    validate_mode(n)
    a_arr, b_arr = _as_array(a), _as_array(b)
    ell = np.arange(1, length + 1)
    ell = ell[(ell <= len(a_arr)) & (ell + n <= len(b_arr))]
    return np.dot(a_arr[ell - 1], (ell + n) * b_arr[ell + n - 1]) if len(ell) else 0.0


def _check_exponents(s: float, beta: float) -> float:
    power = 2.0 * (beta - s)
    if power >= -1.0:
        raise DivergentSeriesError(f"sum n^(2(beta - s)) diverges for s={s!r}, beta={beta!r}; need s > beta + 1/2")
    return power


def lemma41_constant(s: float, beta: float, n_terms: int) -> float:
    """Partial constant sqrt(sum_{n=1}^{K} n^(2(beta - s))).

    It bounds sum n^beta |a_n| by c |a|_s for every sequence of length at most K.
    """
    power = _check_exponents(s, beta)
    if n_terms < 1:
        raise DomainError(f"invalid number of terms {n_terms!r}")
    n = np.arange(1, n_terms + 1, dtype=float)
    return float(np.sqrt(np.sum(n**power)))


def lemma41_constant_limit(s: float, beta: float) -> float:
    """Upper bound of the full constant: explicit terms plus the integral bound of the tail."""
    power = _check_exponents(s, beta)
    cutoff = WEIGHTED_SUM_TAIL_CUTOFF
    n = np.arange(1, cutoff + 1, dtype=float)
    tail = cutoff ** (power + 1.0) / (-power - 1.0)
    return float(np.sqrt(np.sum(n**power) + tail))


def _weighted_norm(values: np.ndarray, s: float) -> float:
    n = np.arange(1, len(values) + 1, dtype=float)
    return float(np.sqrt(np.sum(n ** (2 * s) * np.abs(values) ** 2)))


def lemma41_sides(a: Sequence[Scalar], s: float, beta: float) -> EstimateSides:
    """Sides of sum n^beta |a_n| <= c |a|_s with the partial constant for len(a) terms."""
    a_arr = _as_array(a)
    n = np.arange(1, len(a_arr) + 1, dtype=float)
    lhs = float(np.sum(n**beta * np.abs(a_arr)))
    return EstimateSides(lhs, lemma41_constant(s, beta, max(len(a_arr), 1)) * _weighted_norm(a_arr, s))


def lemma42_constants(s: float) -> tuple:
    """Constants (c1, c2, c3) of the three convolution estimates for index s in (3/4, 1)."""
    eps = (2.0 * s - 1.5) / 2.0
    c1 = lemma41_constant_limit(s, 0.0)
    c2 = lemma41_constant_limit(s, s - 0.5 - eps)
    return c1, c2, 2.0 ** (1.0 - s) * c2


def lemma42_sides(theta: Sequence[float], v: Sequence[float], s: float) -> list:
    """Sides of the three weighted convolution estimates.

    With w_k = k v_k the three left hand sides are the s-norms of
    (1/n) sum_{k<n} theta_{n-k} w_k, (1/n) sum_l theta_{l+n} w_l and (1/n) sum_l theta_l w_{l+n};
    each is bounded by c_i |v|_s |theta|_s.

    Args:
        theta: Coefficients theta_1..theta_N.
        v: Coefficients v_1..v_N.
        s: Sobolev index in (3/4, 1).

    Returns:
        Three EstimateSides, in the order cauchy, left tail, right tail.
    """
    if not 0.75 < s < 1.0:
        raise DomainError(f"invalid Sobolev index {s!r}, expected 3/4 < s < 1")
    theta_arr, v_arr = _as_array(theta), _as_array(v)
    if len(theta_arr) != len(v_arr):
        raise DimensionError("theta and v must have the same length")
    n_max = 2 * len(theta_arr)
    n = np.arange(1, n_max + 1, dtype=float)
    w = np.arange(1, len(v_arr) + 1, dtype=float) * v_arr
    sums = (
        cauchy_all(theta_arr, w, n_max),
        tail_all(theta_arr, w, n_max),
        tail_all(w, theta_arr, n_max),
    )
    bound = _weighted_norm(v_arr, s) * _weighted_norm(theta_arr, s)
    return [EstimateSides(_weighted_norm(values / n, s), c * bound) for values, c in zip(sums, lemma42_constants(s))]


def _lp_norm(values: np.ndarray, p: float) -> float:
    if np.isinf(p):
        return float(np.max(np.abs(values))) if len(values) else 0.0
    return float(np.sum(np.abs(values) ** p) ** (1.0 / p))


def young_sides(a: Sequence[Scalar], b: Sequence[Scalar], p: float, q: float, kind: str = "cauchy") -> EstimateSides:
    """Sides of the discrete Young inequality |a * b|_r <= |a|_p |b|_q with 1 + 1/r = 1/p + 1/q.

    Args:
        a: First sequence.
        b: Second sequence.
        p: Exponent of ``a``, in [1, inf].
        q: Exponent of ``b``, in [1, inf].
        kind: "cauchy" for sum_{k<n} a_{n-k} b_k, "tail" for sum_l a_{l+n} b_l.
    """
    if p < 1 or q < 1:
        raise DomainError(f"invalid exponents p={p!r}, q={q!r}; expected p, q >= 1")
    inv_r = 1.0 / p + 1.0 / q - 1.0
    if inv_r < 0:
        raise DomainError(f"exponents p={p!r}, q={q!r} violate 1/p + 1/q >= 1")
    r = np.inf if inv_r == 0 else 1.0 / inv_r
    a_arr, b_arr = _as_array(a), _as_array(b)
    if kind == "cauchy":
        values = cauchy_all(a_arr, b_arr, len(a_arr) + len(b_arr))
    elif kind == "tail":
        values = tail_all(a_arr, b_arr, max(len(a_arr), 1))
    else:
        raise DomainError(f"unknown convolution kind {kind!r}")
    return EstimateSides(_lp_norm(values, r), _lp_norm(a_arr, p) * _lp_norm(b_arr, q))
