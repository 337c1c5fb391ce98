"""Truncated Fourier representation of the heated string: transforms, norms and sequence estimates."""

from heatedstring.spectral.norms import (
    energy,
    heat_fraction,
    hs_seminorm,
    min_temperature,
    norm_record,
    quadrature_energy,
    theta_infinity,
    wave_energy,
)
from heatedstring.spectral.estimates import (
    EstimateSides,
    conv_cauchy,
    conv_tail_left,
    conv_tail_right,
    lemma41_constant,
    lemma41_constant_limit,
    lemma41_sides,
    lemma42_sides,
    young_sides,
)
from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.transform import analyze, synthesize
from heatedstring.spectral.types import GridField, ModelParams, NormRecord, SpectralState

__all__ = [
    "EstimateSides",
    "GridField",
    "ModelParams",
    "NormRecord",
    "SpectralState",
    "analyze",
    "conv_cauchy",
    "conv_tail_left",
    "conv_tail_right",
    "energy",
    "heat_fraction",
    "hs_seminorm",
    "lemma41_constant",
    "lemma41_constant_limit",
    "lemma41_sides",
    "lemma42_sides",
    "min_temperature",
    "norm_record",
    "quadrature_energy",
    "random_state",
    "synthesize",
    "theta_infinity",
    "wave_energy",
    "young_sides",
]
