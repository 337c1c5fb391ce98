"""Projected variables, the Duhamel map and its Picard iteration."""

from heatedstring.projections.basis import ModeBasis, ProjectionBasis, build_basis, invert_checked
from heatedstring.projections.duhamel import SupBound, duhamel_map, duhamel_sup_bound_check
from heatedstring.projections.expm import expm, expm_phi, phi_functions
from heatedstring.projections.fixed_point import (
    FixedPointResult,
    IterationRecord,
    RadiusProbe,
    empirical_radius,
    fixed_point_solve,
    scaled_initial,
)
from heatedstring.projections.forcing import forcing_all, forcing_F
from heatedstring.projections.norms import XNormReport, initial_size, seq_norm_s, x_distance, x_norm
from heatedstring.projections.state import (
    ProjectionState,
    ProjectionTrajectory,
    from_projection,
    project_trajectory,
    to_projection,
    unproject_trajectory,
)

__all__ = [
    "FixedPointResult",
    "IterationRecord",
    "ModeBasis",
    "ProjectionBasis",
    "ProjectionState",
    "ProjectionTrajectory",
    "RadiusProbe",
    "SupBound",
    "XNormReport",
    "build_basis",
    "duhamel_map",
    "duhamel_sup_bound_check",
    "empirical_radius",
    "expm",
    "expm_phi",
    "fixed_point_solve",
    "forcing_F",
    "forcing_all",
    "from_projection",
    "initial_size",
    "invert_checked",
    "phi_functions",
    "project_trajectory",
    "scaled_initial",
    "seq_norm_s",
    "to_projection",
    "unproject_trajectory",
    "x_distance",
    "x_norm",
]
