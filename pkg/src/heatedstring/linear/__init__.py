"""Per-mode linear analysis: operators, spectra, similarity forms and thresholds."""

from heatedstring.linear.eigen import (
    BRANCHES,
    EigenSystem,
    asymptotic_eigenvalues,
    asymptotic_vectors,
    eigen_asymptotic,
    eigen_condition,
    eigen_exact,
    eigenvalues,
)
from heatedstring.linear.matrices import (
    GershgorinDisks,
    ModeMatrix,
    build_A,
    build_Astar,
    char_poly,
    char_poly_coeffs,
    gershgorin,
    gershgorin_separated,
    separation_threshold,
)
from heatedstring.linear.report import SlopeCheck, SpectralRow, asymptotic_slopes, spectral_table
from heatedstring.linear.similarity import (
    LyapunovCheck,
    SimilarityTriple,
    cinv_leading,
    lyapunov_rate_check,
    similarity,
    similarity_residual,
)
from heatedstring.linear.thresholds import ThresholdReport, slowest_rate, spectral_onset, thresholds

__all__ = [
    "BRANCHES",
    "EigenSystem",
    "GershgorinDisks",
    "LyapunovCheck",
    "ModeMatrix",
    "SimilarityTriple",
    "SlopeCheck",
    "SpectralRow",
    "ThresholdReport",
    "asymptotic_eigenvalues",
    "asymptotic_slopes",
    "asymptotic_vectors",
    "build_A",
    "build_Astar",
    "char_poly",
    "char_poly_coeffs",
    "cinv_leading",
    "eigen_asymptotic",
    "eigen_condition",
    "eigen_exact",
    "eigenvalues",
    "gershgorin",
    "gershgorin_separated",
    "lyapunov_rate_check",
    "separation_threshold",
    "similarity",
    "similarity_residual",
    "slowest_rate",
    "spectral_onset",
    "spectral_table",
    "thresholds",
]
