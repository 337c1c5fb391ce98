"""Tests for discrete convolutions and the weighted sequence estimates."""

import numpy as np
import pytest

from heatedstring.exceptions import DimensionError, DivergentSeriesError, DomainError
from heatedstring.spectral.estimates import (
    cauchy_all,
    conv_cauchy,
    conv_tail_left,
    conv_tail_right,
    lemma41_constant,
    lemma41_constant_limit,
    lemma41_sides,
    lemma42_constants,
    lemma42_sides,
    tail_all,
    young_sides,
)


def _brute_cauchy(a, b, n):
    return sum(a[n - k - 1] * b[k - 1] for k in range(1, n) if k <= len(b) and n - k <= len(a))


def _brute_tail(a, b, n):
    return sum(a[l + n - 1] * b[l - 1] for l in range(1, len(b) + 1) if l + n <= len(a))


def test_conv_cauchy_small():
    """A = B = (1, 1) gives 1 at n = 2 and 2 at n = 3 when three ones are present."""
    assert conv_cauchy([1.0, 1.0], [1.0, 1.0], 2) == 1.0
    assert conv_cauchy([1.0, 1.0, 1.0], [1.0, 1.0, 1.0], 3) == 2.0
    assert conv_cauchy([1.0], [1.0], 1) == 0.0


def test_conv_tails_small():
    """Weighted tail sums against hand computed values."""
    # a_2 * 1 * b_1 + a_3 * 2 * b_2
    assert conv_tail_left([1.0, 2.0, 3.0], [1.0, 1.0, 1.0], 1, 2) == 8.0
    # a_1 * 2 * b_2 + a_2 * 3 * b_3
    assert conv_tail_right([1.0, 1.0], [1.0, 1.0, 1.0], 1, 5) == 5.0
    with pytest.raises(DomainError):
        conv_cauchy([1.0], [1.0], 0)


def test_vectorized_sums_match_loops(rng):
    """cauchy_all and tail_all agree with direct double loops, complex entries included."""
    for length_a, length_b in ((1, 1), (5, 3), (7, 7), (4, 9)):
        a = rng.normal(size=length_a) + 1j * rng.normal(size=length_a)
        b = rng.normal(size=length_b)
        n_max = length_a + length_b + 2
        cauchy = cauchy_all(a, b, n_max)
        tail = tail_all(a, b, n_max)
        for n in range(1, n_max + 1):
            assert cauchy[n - 1] == pytest.approx(_brute_cauchy(a, b, n), abs=1e-12)
            assert tail[n - 1] == pytest.approx(_brute_tail(a, b, n), abs=1e-12)
            assert conv_cauchy(a, b, n) == pytest.approx(cauchy[n - 1], abs=1e-12)


def test_lemma41_constant_values():
    """For s = 1, beta = 0 the limit is pi / sqrt(6) and partial sums increase toward it."""
    assert lemma41_constant(1.0, 0.0, 1) == 1.0
    assert lemma41_constant(1.0, 0.0, 2) == pytest.approx(np.sqrt(1.25))
    assert lemma41_constant_limit(1.0, 0.0) == pytest.approx(np.pi / np.sqrt(6.0), rel=1e-8)
    assert lemma41_constant(0.9, 0.0, 1000) < lemma41_constant_limit(0.9, 0.0)


def test_lemma41_divergent():
    """s <= beta + 1/2 makes the defining series diverge."""
    with pytest.raises(DivergentSeriesError):
        lemma41_constant(0.8, 0.5, 10)
    with pytest.raises(DivergentSeriesError):
        lemma41_constant_limit(0.8, 0.3)
    with pytest.raises(DomainError):
        lemma41_constant(0.8, 0.0, 0)


def test_lemma41_random(rng):
    """The weighted l1 bound holds on random sequences of random length."""
    for _ in range(1000):
        length = int(rng.integers(1, 40))
        a = rng.normal(size=length) * np.arange(1, length + 1) ** -rng.uniform(0.0, 2.0)
        s = rng.uniform(0.8, 1.5)
        beta = rng.uniform(0.0, s - 0.55)
        assert lemma41_sides(a, s, beta).holds


def test_lemma42_constants_order():
    """c3 = 2^(1-s) c2 and all constants are finite and positive."""
    c1, c2, c3 = lemma42_constants(0.8)
    assert min(c1, c2, c3) > 0
    assert np.isfinite([c1, c2, c3]).all()
    assert c3 == pytest.approx(2.0**0.2 * c2)


def test_lemma42_random(rng):
    """All three convolution estimates hold on random smooth and rough pairs."""
    for _ in range(200):
        length = int(rng.integers(1, 33))
        n = np.arange(1, length + 1, dtype=float)
        theta = rng.normal(size=length) * n ** -rng.uniform(0.0, 3.0)
        v = rng.normal(size=length) * n ** -rng.uniform(0.0, 3.0)
        s = rng.uniform(0.76, 0.99)
        sides = lemma42_sides(theta, v, s)
        assert len(sides) == 3
        assert all(side.holds for side in sides)


def test_lemma42_rejects_bad_input():
    """s outside (3/4, 1) or mismatched lengths are refused."""
    with pytest.raises(DomainError):
        lemma42_sides([1.0], [1.0], 0.7)
    with pytest.raises(DimensionError):
        lemma42_sides([1.0, 2.0], [1.0], 0.8)


@pytest.mark.parametrize(("p", "q"), [(1.0, 1.0), (1.0, 2.0), (2.0, 2.0), (1.5, 1.5), (1.0, np.inf)])
def test_young_random(rng, p, q):
    """Young's inequality holds for both convolution kinds."""
    for _ in range(100):
        a = rng.normal(size=int(rng.integers(1, 20)))
        b = rng.normal(size=int(rng.integers(1, 20)))
        assert young_sides(a, b, p, q).holds
        assert young_sides(a, b, p, q, kind="tail").holds


def test_young_rejects_bad_exponents():
    """Exponents below one, with 1/p + 1/q < 1, or an unknown kind are refused."""
    with pytest.raises(DomainError):
        young_sides([1.0], [1.0], 0.5, 1.0)
    with pytest.raises(DomainError):
        young_sides([1.0], [1.0], 3.0, 3.0)
    with pytest.raises(DomainError):
        young_sides([1.0], [1.0], 1.0, 1.0, kind="circular")
