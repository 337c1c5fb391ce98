"""Validation utilities."""

from __future__ import annotations

from typing import Any, Optional

import numpy as np

from heatedstring.exceptions import DimensionError, DomainError


def validate_length(name: str, values: Any, expected: int) -> None:
    """Verify that a coefficient sequence has exactly the expected length.

    Args:
        name: Name of the sequence, used in the error message.
        values: The sequence.
        expected: The truncation N.
    """
    if len(values) != expected:
        raise DimensionError(f"invalid {name}: found {len(values)} coefficients, expected {expected}")


def validate_positive(name: str, value: float, allow_zero: bool = False) -> None:
    """Check that a scalar parameter is positive (or non-negative when ``allow_zero``).

    Args:
        name: Name of the parameter.
        value: Its value.
        allow_zero: Accept zero.
    """
    if not np.isfinite(value) or value < 0 or (value == 0 and not allow_zero):
        bound = "non-negative" if allow_zero else "positive"
        raise DomainError(f"invalid {name}: {value!r}, expected a finite {bound} number")


def validate_mode(n: int, n_min: int = 1, n_max: Optional[int] = None) -> None:
    """Check that a mode index is an integer in ``n_min..n_max``.

    Args:
        n: The mode index.
        n_min: Smallest admissible index.
        n_max: Largest admissible index, unbounded when None.
    """
    if int(n) != n or n < n_min:
        raise DomainError(f"invalid mode index {n!r}, expected an integer >= {n_min}")
    if n_max is not None and n > n_max:
        raise DomainError(f"mode index {n} is out of range 1..{n_max}")


def validate_finite(name: str, values: Any) -> None:
    """Check that every entry of an array is finite.

    Args:
        name: Name of the array.
        values: The array.
    """
    if not np.all(np.isfinite(values)):
        raise DomainError(f"invalid {name}: contains non-finite entries")
