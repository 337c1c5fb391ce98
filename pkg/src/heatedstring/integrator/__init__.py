"""Time integration of the truncated system."""

from heatedstring.integrator.io import (
    TRAJECTORY_COLUMNS,
    Snapshot,
    load_snapshot,
    parse_snapshot,
    save_snapshot,
    snapshot_bytes,
    write_trajectory_csv,
)
from heatedstring.integrator.run import run, run_linear_mode
from heatedstring.integrator.steppers import check_rk4_step, step_etd, step_rk4
from heatedstring.integrator.types import METHODS, IntegratorConfig, LinearModeRecord, Method, TrajectoryRecord

__all__ = [
    "METHODS",
    "TRAJECTORY_COLUMNS",
    "IntegratorConfig",
    "LinearModeRecord",
    "Method",
    "Snapshot",
    "TrajectoryRecord",
    "check_rk4_step",
    "load_snapshot",
    "parse_snapshot",
    "run",
    "run_linear_mode",
    "save_snapshot",
    "snapshot_bytes",
    "step_etd",
    "step_rk4",
]
