"""Projected variables U_n = B_n (n u_n, v_n, theta_n) and trajectories of them."""

from dataclasses import dataclass

import numpy as np

from heatedstring.constants import REALITY_TOL
from heatedstring.exceptions import DimensionError, DomainError
from heatedstring.projections.basis import ProjectionBasis
from heatedstring.spectral.types import ModelParams, SpectralState


@dataclass(frozen=True, eq=False)
class ProjectionState:
    """Projected variables of one spectral state.

    ``U[:, j]`` holds U_{j+1,n} for n = 1..N. For a real state and the leading-order basis,
    U_3 is the complex conjugate of U_2.
    """

    theta0: complex
    """Mean temperature; complex so that Picard iterates may leave the real axis."""
    U: np.ndarray
    """Projected variables, shape (N, 3)."""

    def __post_init__(self) -> None:
        """Coerce and check shape."""
        object.__setattr__(self, "theta0", complex(self.theta0))
        values = np.array(self.U, dtype=complex)
        if values.ndim != 2 or values.shape[1] != 3:
            raise DimensionError(f"projected variables must have shape (N, 3), got {values.shape}")
        object.__setattr__(self, "U", values)

    @property
    def n_modes(self) -> int:
        """Truncation N."""
        return self.U.shape[0]


@dataclass(frozen=True, eq=False)
class ProjectionTrajectory:
    """Samples of a projected solution on a uniform time grid."""

    times: np.ndarray
    """Uniform grid starting at 0."""
    theta0: np.ndarray
    """Mean temperature at every time, complex."""
    U: np.ndarray
    """Projected variables, shape (T, N, 3)."""

    def __post_init__(self) -> None:
        """Coerce and check shapes."""
        object.__setattr__(self, "times", np.asarray(self.times, dtype=float))
        object.__setattr__(self, "theta0", np.asarray(self.theta0, dtype=complex))
        object.__setattr__(self, "U", np.asarray(self.U, dtype=complex))
        if self.U.ndim != 3 or self.U.shape[2] != 3:
            raise DimensionError(f"projected trajectory must have shape (T, N, 3), got {self.U.shape}")
        if len(self.times) != self.U.shape[0] or len(self.theta0) != len(self.times):
            raise DimensionError("times, theta0 and U disagree on the number of samples")

    @property
    def step(self) -> float:
        """Uniform time step."""
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0

    def at(self, k: int) -> ProjectionState:
        """State at sample ``k``."""
        return ProjectionState(self.theta0[k], self.U[k])

    @classmethod
    def constant(cls, state: ProjectionState, times: np.ndarray) -> "ProjectionTrajectory":
        """Trajectory that stays at ``state`` for all times."""
        count = len(times)
        return cls(
            times,
            np.full(count, state.theta0, dtype=complex),
            np.broadcast_to(state.U, (count, *state.U.shape)).copy(),
        )


def to_projection(state: SpectralState, params: ModelParams, basis: ProjectionBasis) -> ProjectionState:
    """Map a spectral state to projected variables."""
    state.check(params)
    if basis.params.n_modes != params.n_modes:
        raise DimensionError(f"basis has {basis.params.n_modes} modes, state has {params.n_modes}")
    y = state.mode_vectors().astype(complex)
    return ProjectionState(state.theta0, np.einsum("nij,nj->ni", basis.matrices, y))


def mode_vectors(pstate: ProjectionState, basis: ProjectionBasis) -> np.ndarray:
    """Complex per-mode vectors y_n = B_n^{-1} U_n, shape (N, 3)."""
    if pstate.n_modes != len(basis.modes):
        raise DimensionError(f"basis has {len(basis.modes)} modes, projected state has {pstate.n_modes}")
    return np.einsum("nij,nj->ni", basis.inverses, pstate.U)


def from_projection(pstate: ProjectionState, params: ModelParams, basis: ProjectionBasis) -> SpectralState:
    """Map projected variables back to a real spectral state.

    Raises:
        DomainError: If the projected variables do not correspond to a real state.
    """
    y = mode_vectors(pstate, basis)
    scale = max(1.0, float(np.max(np.abs(y))) if y.size else 0.0, abs(pstate.theta0))
    imag = max(float(np.max(np.abs(y.imag))) if y.size else 0.0, abs(pstate.theta0.imag))
    if imag > REALITY_TOL * scale:
        raise DomainError(f"projected variables are not the image of a real state (imaginary part {imag:.3e})")
    return SpectralState.from_mode_vectors(pstate.theta0.real, y.real)


def project_trajectory(
    states: list, times: np.ndarray, params: ModelParams, basis: ProjectionBasis
) -> ProjectionTrajectory:
    """Project a sequence of spectral states sampled at ``times``."""
    projected = [to_projection(state, params, basis) for state in states]
    return ProjectionTrajectory(
        times,
        np.array([p.theta0 for p in projected]),
        np.stack([p.U for p in projected]),
    )


def unproject_trajectory(trajectory: ProjectionTrajectory, params: ModelParams, basis: ProjectionBasis) -> list:
    """Real spectral states of every sample of a projected trajectory."""
    return [from_projection(trajectory.at(k), params, basis) for k in range(len(trajectory.times))]
