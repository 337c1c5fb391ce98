"""Numerical defaults and tolerances shared across heatedstring."""

DEFAULT_S: float = 0.8
"""Sobolev index used when none is given; inside the range (3/4, 1) the decay theorem needs."""

S_RANGE: tuple = (0.75, 1.0)
"""Open interval of Sobolev indices admitted by the weighted estimates."""

GRID_OVERSAMPLING: int = 4
"""Default number of grid intervals per retained mode (M = GRID_OVERSAMPLING * N)."""

ROUND_TRIP_TOL: float = 1e-10
"""Tolerance for analyze/synthesize and projection round trips."""

BOUNDARY_TOL: float = 1e-9
"""Relative tolerance on the Dirichlet values u(0) and u(pi) of a grid field."""

NEWTON_RESIDUAL_TOL: float = 1e-9
"""Target for |p(lambda)| relative to max(1, n^4) when polishing eigenvalues."""

NEWTON_MAX_ITER: int = 60
"""Maximum number of Newton steps per root."""

REAL_ROOT_TOL: float = 1e-12
"""Relative size of the imaginary part below which a root counts as real."""

EIGEN_BASIS_MAX_COND: float = 1e8
"""Largest eigenvector condition number for which an exact eigenbasis is used at small n."""

SINGULAR_COND: float = 1e12
"""Condition number above which a 3x3 matrix is treated as numerically singular."""

BOUND_MATRIX_ENTRY: float = 2.0
"""Bound on the entries of C_n and its inverse required past N0."""

THRESHOLD_SCAN_WINDOW: int = 64
"""Number of consecutive modes on which the spectral clauses of N0 are verified."""

WEIGHTED_SUM_TAIL_CUTOFF: int = 100_000
"""Number of explicit terms before the integral tail bound in the weighted-sum constant."""

PHI_SERIES_RADIUS: float = 0.5
"""Below this |z| the phi functions are evaluated by their Taylor series."""

PHI_SERIES_TERMS: int = 18
"""Number of Taylor terms for the phi functions."""

PADE_DEGREE: int = 6
"""Degree of the diagonal Pade approximant used by the matrix exponential."""

PADE_SCALING_NORM: float = 0.5
"""1-norm below which the scaled matrix is handed to the Pade approximant."""

DUHAMEL_MAX_STEP_PHASE: float = 0.25
"""Largest h * N for which the piecewise-linear Duhamel quadrature is accepted."""

PICARD_MAX_ITER: int = 60
"""Maximum number of Picard iterations."""

PICARD_DIVERGENCE_STREAK: int = 3
"""Consecutive non-contracting iterations that abort the Picard solve."""

PICARD_TOL: float = 1e-10
"""Default X-norm tolerance between successive Picard iterates."""

REALITY_TOL: float = 1e-9
"""Relative size of imaginary parts tolerated when mapping projections back to a real state."""

SLOPE_TOL: float = 0.3
"""Accepted deviation of a fitted log-log convergence order from its prediction."""

RK4_STABILITY_MARGIN: float = 2.5
"""Largest dt * N^2 accepted by the explicit rk4 stepper."""

SMALL_DATA_SIZE: float = 1e-3
"""Target initial size of the small-data preset, in the sense of the Picard ball."""

FIT_WINDOW: tuple = (0.5, 0.95)
"""Default decay-fit window as fractions of the run length."""

FIT_FLOOR: float = 1e-10
"""Values of |theta0 - theta_inf| at or below FIT_FLOOR * max(1, theta_inf) are treated as round-off."""

ACCEPT_RATE_FACTOR: float = 0.9
"""Fitted norm decay rates must reach this multiple of alpha."""

ACCEPT_THETA0_RATE_FACTOR: float = 1.8
"""The fitted decay rate of |theta0 - theta_inf| must reach this multiple of alpha."""

ACCEPT_CONTRACTION: float = 0.9
"""Largest empirical Picard contraction factor accepted by the duhamel command."""

ACCEPT_FIXED_POINT_DISTANCE: float = 1e-4
"""Largest X-distance between the Picard fixed point and direct integration."""
