"""Galerkin right hand side of the heated string."""

from heatedstring.nonlinear.system import (
    RhsOutput,
    energy_rate,
    g3,
    g3_all,
    linear_rhs,
    mean_temperature_rate,
    quadratic_sums,
    rhs,
    rhs_arrays,
)

__all__ = [
    "RhsOutput",
    "energy_rate",
    "g3",
    "g3_all",
    "linear_rhs",
    "mean_temperature_rate",
    "quadratic_sums",
    "rhs",
    "rhs_arrays",
]
