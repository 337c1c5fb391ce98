"""Types for the truncated Fourier representation of the heated string."""

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

import numpy as np

from heatedstring.constants import BOUNDARY_TOL, DEFAULT_S, GRID_OVERSAMPLING, S_RANGE
from heatedstring.exceptions import AliasingError, DomainError
from heatedstring.utils.validate import validate_finite, validate_length, validate_positive


@dataclass(frozen=True)
class ModelParams:
    """Model and discretisation parameters.

    ``mu`` must be positive; a decoupled model (``mu == 0``) is only accepted with ``allow_uncoupled``.
    ``s`` must lie in the open interval (3/4, 1) unless ``allow_any_s`` is set.
    """

    mu: float
    """Thermoelastic coupling constant."""
    a: float
    """Linearization temperature, usually theta_infinity of the experiment."""
    n_modes: int
    """Truncation N: number of retained sine/cosine modes."""
    s: float = DEFAULT_S
    """Sobolev index of the weighted norms."""
    grid_points: int = 0
    """Number M of grid intervals on [0, pi]; zero selects GRID_OVERSAMPLING * N."""
    allow_any_s: bool = False
    """Accept any non-negative ``s`` (diagnostics only)."""
    allow_uncoupled: bool = False
    """Accept ``mu == 0``."""

    def __post_init__(self) -> None:
        """Validate and fill in the default grid."""
        validate_positive("mu", self.mu, allow_zero=self.allow_uncoupled)
        validate_positive("a", self.a)
        if int(self.n_modes) != self.n_modes or self.n_modes < 1:
            raise DomainError(f"invalid n_modes: {self.n_modes!r}, expected a positive integer")
        if self.allow_any_s:
            validate_positive("s", self.s, allow_zero=True)
        elif not S_RANGE[0] < self.s < S_RANGE[1]:
            raise DomainError(f"invalid s: {self.s!r}, expected {S_RANGE[0]} < s < {S_RANGE[1]}")
        if self.grid_points == 0:
            object.__setattr__(self, "grid_points", GRID_OVERSAMPLING * self.n_modes)
        elif int(self.grid_points) != self.grid_points or self.grid_points < 1:
            raise DomainError(f"invalid grid_points: {self.grid_points!r}")
        elif self.grid_points < 2 * self.n_modes + 1:
            raise AliasingError(
                f"grid of {self.grid_points} intervals cannot resolve {self.n_modes} modes; "
                f"need at least {2 * self.n_modes + 1}"
            )

    @property
    def modes(self) -> np.ndarray:
        """Mode numbers 1..N as floats."""
        return np.arange(1, self.n_modes + 1, dtype=float)

    def with_a(self, a: float) -> "ModelParams":
        """Copy with a different linearization temperature."""
        return replace(self, a=float(a))

    def with_n_modes(self, n_modes: int) -> "ModelParams":
        """Copy with a different truncation and the default grid for it."""
        return replace(self, n_modes=n_modes, grid_points=0)


@dataclass(frozen=True, eq=False)
class SpectralState:
    """Fourier coefficients of (u, u_t, theta).

    ``u``, ``v`` and ``theta`` hold the coefficients of modes 1..N; index 0 is mode 1.
    """

    theta0: float
    """Mean temperature, the zeroth cosine coefficient."""
    u: np.ndarray = field(default_factory=lambda: np.zeros(0))
    """Sine coefficients of the displacement."""
    v: np.ndarray = field(default_factory=lambda: np.zeros(0))
    """Sine coefficients of the velocity."""
    theta: np.ndarray = field(default_factory=lambda: np.zeros(0))
    """Cosine coefficients of the temperature, modes 1..N."""

    def __post_init__(self) -> None:
        """Coerce to float arrays and check shapes."""
        object.__setattr__(self, "theta0", float(self.theta0))
        for name in ("u", "v", "theta"):
            values = np.array(getattr(self, name), dtype=float).reshape(-1)
            object.__setattr__(self, name, values)
        validate_length("v", self.v, len(self.u))
        validate_length("theta", self.theta, len(self.u))
        validate_finite("theta0", self.theta0)
        validate_finite("u", self.u)
        validate_finite("v", self.v)
        validate_finite("theta", self.theta)

    @property
    def n_modes(self) -> int:
        """Truncation N of this state."""
        return len(self.u)

    @classmethod
    def zeros(cls, n_modes: int, theta0: float = 0.0) -> "SpectralState":
        """State with all coefficients zero except the mean temperature."""
        return cls(theta0, np.zeros(n_modes), np.zeros(n_modes), np.zeros(n_modes))

    def check(self, params: ModelParams) -> None:
        """Raise DimensionError unless the state matches ``params.n_modes``."""
        validate_length("u", self.u, params.n_modes)

    def to_vector(self) -> np.ndarray:
        """Pack as [theta0, u, v, theta]."""
        return np.concatenate(([self.theta0], self.u, self.v, self.theta))

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "SpectralState":
        """Inverse of ``to_vector``."""
        n = (len(vector) - 1) // 3
        return cls(vector[0], vector[1 : n + 1], vector[n + 1 : 2 * n + 1], vector[2 * n + 1 :])

    def mode_vectors(self) -> np.ndarray:
        """Per-mode vectors y_n = (n u_n, v_n, theta_n) as an (N, 3) array."""
        n = np.arange(1, self.n_modes + 1, dtype=float)
        return np.stack((n * self.u, self.v, self.theta), axis=1)

    @classmethod
    def from_mode_vectors(cls, theta0: float, y: np.ndarray) -> "SpectralState":
        """Inverse of ``mode_vectors``."""
        n = np.arange(1, len(y) + 1, dtype=float)
        return cls(theta0, y[:, 0] / n, y[:, 1], y[:, 2])


@dataclass(frozen=True, eq=False)
class GridField:
    """Samples of (u, u_t, theta) at the M + 1 points x_j = j pi / M."""

    x: np.ndarray
    """Collocation points."""
    u: np.ndarray
    """Displacement samples; zero at both ends."""
    u_t: np.ndarray
    """Velocity samples."""
    theta: np.ndarray
    """Temperature samples."""

    def __post_init__(self) -> None:
        """Check lengths and the Dirichlet condition."""
        for name in ("x", "u", "u_t", "theta"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        for name in ("u", "u_t", "theta"):
            validate_length(name, getattr(self, name), len(self.x))
        scale = 1.0 + float(np.max(np.abs(self.u))) if len(self.u) else 1.0
        if len(self.u) and max(abs(self.u[0]), abs(self.u[-1])) > BOUNDARY_TOL * scale:
            raise DomainError("invalid grid field: u must vanish at x = 0 and x = pi")

    @property
    def grid_points(self) -> int:
        """Number M of grid intervals."""
        return len(self.x) - 1


class NormRecord(NamedTuple):
    """Diagnostics of one recorded state."""

    t: float
    """Time of the record."""
    energy: float
    """Total energy, conserved by the dynamics."""
    hs_u_x: float
    """H^s seminorm of (n u_n)."""
    hs_u_t: float
    """H^s seminorm of (v_n)."""
    hs_theta_dev: float
    """H^s seminorm of (theta_n), n >= 1."""
    theta0_dev: float
    """|theta0 - theta_infinity|."""
    min_theta: Optional[float] = None
    """Minimum of the synthesized temperature on the grid; may be negative."""
