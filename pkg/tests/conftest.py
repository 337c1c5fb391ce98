"""Fixtures for pytest."""

from typing import NamedTuple

import numpy as np
import pytest

from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.types import ModelParams, SpectralState


class ParamGrid(NamedTuple):
    """Coupling constants and linearization temperatures swept by the spectral tests."""

    a_values: tuple
    mu_values: tuple


@pytest.fixture(scope="session")
def unit_params() -> ModelParams:
    """a = mu = 1 with a handful of modes."""
    return ModelParams(mu=1.0, a=1.0, n_modes=8)


@pytest.fixture(scope="session")
def param_grid() -> ParamGrid:
    """The (a, mu) sweep of the eigenvalue checks."""
    return ParamGrid(a_values=(0.5, 1.0, 2.0), mu_values=(0.5, 1.0, 2.0))


@pytest.fixture()
def rng() -> np.random.Generator:
    """Seeded generator; a fresh one per test."""
    return np.random.default_rng(20240517)


@pytest.fixture()
def small_state(unit_params: ModelParams, rng: np.random.Generator) -> SpectralState:
    """Random smooth state of moderate size for ``unit_params``."""
    return random_state(unit_params, rng, amplitude=0.5)
