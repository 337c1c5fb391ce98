"""Integrator configuration and trajectory records."""

from dataclasses import dataclass, field
from typing import List, NamedTuple

import numpy as np
from typing_extensions import Literal

from heatedstring.exceptions import DomainError
from heatedstring.spectral.types import NormRecord, SpectralState
from heatedstring.utils.validate import validate_positive

Method = Literal["etd_rk2", "rk4"]
"""Time stepping schemes."""

METHODS = ("etd_rk2", "rk4")


@dataclass(frozen=True)
class IntegratorConfig:
    """Time stepping options."""

    t_end: float
    """Final time."""
    dt: float
    """Step size."""
    method: Method = "etd_rk2"
    """Stepper; "etd_rk2" integrates the linear part exactly, "rk4" is fully explicit."""
    record_every: int = 1
    """Record norms and states every this many steps."""

    def __post_init__(self) -> None:
        """Validate."""
        validate_positive("t_end", self.t_end)
        validate_positive("dt", self.dt)
        if self.method not in METHODS:
            raise DomainError(f"unknown method {self.method!r}, expected one of {', '.join(METHODS)}")
        if int(self.record_every) != self.record_every or self.record_every < 1:
            raise DomainError(f"invalid record_every {self.record_every!r}, expected a positive integer")

    @property
    def steps(self) -> int:
        """Number of steps to reach ``t_end``; the last step is not shortened."""
        return max(1, int(np.ceil(self.t_end / self.dt - 1e-9)))


@dataclass(eq=False)
class TrajectoryRecord:
    """Recorded output of a run.

    ``norms`` and ``states`` are aligned with ``times``; the first entry is the initial state.
    """

    theta_inf: float
    """theta_infinity of the initial state."""
    times: List[float] = field(default_factory=list)
    """Record times."""
    states: List[SpectralState] = field(default_factory=list)
    """Recorded states."""
    norms: List[NormRecord] = field(default_factory=list)
    """Recorded diagnostics."""

    def append(self, t: float, state: SpectralState, norms: NormRecord) -> None:
        """Add one record."""
        self.times.append(float(t))
        self.states.append(state)
        self.norms.append(norms)

    def series(self, name: str) -> np.ndarray:
        """One NormRecord field as an array."""
        return np.array([getattr(rec, name) for rec in self.norms], dtype=float)

    @property
    def final(self) -> SpectralState:
        """Last recorded state."""
        return self.states[-1]


class LinearModeRecord(NamedTuple):
    """Weighted energy norm of one linear mode over time."""

    times: np.ndarray
    """Sample times."""
    values: np.ndarray
    """sqrt(y_1^2 + y_2^2 + y_3^2 / a)."""
