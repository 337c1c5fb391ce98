"""Trajectory CSV output and binary state snapshots."""

import csv
from pathlib import Path
from typing import NamedTuple, Union

from construct import ConstructError

from heatedstring._layouts.snapshot import SNAPSHOT_LAYOUT, SnapshotVersion
from heatedstring.exceptions import ConfigError
from heatedstring.integrator.types import TrajectoryRecord
from heatedstring.spectral.types import ModelParams, SpectralState

TRAJECTORY_COLUMNS = ("t", "energy", "hs_u_x", "hs_u_t", "hs_theta_dev", "theta0_dev", "min_theta")
"""Header of the trajectory CSV, in column order."""

_SNAPSHOT_HEADER_SIZE = 44
_SNAPSHOT_BYTES_PER_MODE = 24

PathLike = Union[str, Path]


class Snapshot(NamedTuple):
    """A state read back from disk."""

    state: SpectralState
    """The stored coefficients."""
    mu: float
    """Coupling constant of the run that wrote the snapshot."""
    a: float
    """Linearization temperature of that run."""
    t: float
    """Time of the stored state."""


def write_trajectory_csv(record: TrajectoryRecord, path: PathLike) -> Path:
    """Write the norm records of ``record`` as CSV; a missing min_theta is written as an empty field."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRAJECTORY_COLUMNS)
        for norms in record.norms:
            writer.writerow(["" if value is None else repr(float(value)) for value in norms])
    return path


def snapshot_bytes(state: SpectralState, params: ModelParams, t: float) -> bytes:
    """Encode ``state`` with the current snapshot layout."""
    state.check(params)
    return SNAPSHOT_LAYOUT.build(
        {
            "version": SnapshotVersion.V1,
            "body": {
                "n_modes": state.n_modes,
                "mu": params.mu,
                "a": params.a,
                "t": float(t),
                "theta0": state.theta0,
                "u": state.u.tolist(),
                "v": state.v.tolist(),
                "theta": state.theta.tolist(),
            },
        }
    )


def parse_snapshot(data: bytes, source: str = "<bytes>") -> Snapshot:
    """Decode snapshot bytes.

    Raises:
        ConfigError: If the data are not a complete snapshot of a known version.
    """
    try:
        decoded = SNAPSHOT_LAYOUT.parse(data)
    except ConstructError as exc:
        raise ConfigError(f"not a heatedstring snapshot ({exc})", path=source) from exc
    body = decoded.body
    if body is None:
        raise ConfigError(f"unsupported snapshot version {decoded.version}", path=source)
    if len(data) != _SNAPSHOT_HEADER_SIZE + _SNAPSHOT_BYTES_PER_MODE * body.n_modes:
        raise ConfigError(f"snapshot size does not match its {body.n_modes} modes", path=source)
    state = SpectralState(body.theta0, list(body.u), list(body.v), list(body.theta))
    return Snapshot(state, body.mu, body.a, body.t)


def save_snapshot(state: SpectralState, params: ModelParams, t: float, path: PathLike) -> Path:
    """Write ``state`` to ``path`` as a binary snapshot."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(snapshot_bytes(state, params, t))
    return path


def load_snapshot(path: PathLike) -> Snapshot:
    """Read a snapshot written by ``save_snapshot``."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read snapshot: {exc.strerror}", path=str(path)) from exc
    return parse_snapshot(data, str(path))
