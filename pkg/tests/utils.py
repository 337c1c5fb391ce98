"""Shared helpers for tests."""

from pathlib import Path

import numpy as np

from heatedstring.spectral.types import SpectralState


def assert_states_close(first: SpectralState, second: SpectralState, atol: float) -> None:
    """Assert that two states agree coefficientwise within ``atol``."""
    np.testing.assert_allclose(first.to_vector(), second.to_vector(), rtol=0.0, atol=atol)


def write_config(directory: Path, text: str, name: str = "experiment.cfg") -> Path:
    """Write a configuration file and return its path."""
    path = directory / name
    path.write_text(text)
    return path
