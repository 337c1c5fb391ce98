"""Long-running acceptance experiments: conservation, decay rates and the Duhamel fixed point."""

import numpy as np
import pytest

from heatedstring.analysis.commands import decay_fit, duhamel
from heatedstring.analysis.config import config_from_text
from heatedstring.analysis.fit import fit_decay
from heatedstring.integrator import IntegratorConfig, run, run_linear_mode
from heatedstring.linear.eigen import eigen_exact
from heatedstring.linear.thresholds import thresholds
from heatedstring.spectral.norms import energy
from heatedstring.spectral.sampling import random_state
from heatedstring.spectral.types import ModelParams


@pytest.mark.integration
def test_energy_is_conserved():
    """N = 64, mu = 0.5, T = 10: the relative energy drift stays below 1e-6."""
    params = ModelParams(mu=0.5, a=1.0, n_modes=64)
    initial = random_state(params, np.random.default_rng(42), amplitude=0.1)
    record = run(initial, params, IntegratorConfig(t_end=10.0, dt=1e-3, record_every=100))
    energies = record.series("energy")
    assert len(energies) == 101
    assert np.max(np.abs(energies - energy(initial))) <= 1e-6 * energy(initial)


@pytest.mark.integration
def test_decay_rates_reach_alpha(tmp_path):
    """Small data at N = 64: every norm decays at least at 0.9 alpha and theta0 at 1.8 alpha."""
    text = """
[model]
mu = 1.0
n_modes = 64

[initial]
preset = small-data
seed = 3

[integrator]
t_end = 280
dt = 0.02
record_every = 50
"""
    config = config_from_text(text, out_dir=tmp_path, environ={})
    result = decay_fit(config)
    summary = result.summary
    assert summary["alpha"] == pytest.approx(thresholds(config.params, 1.0).alpha)
    assert 20.0 / summary["alpha"] <= 280.0
    for name, entry in summary["fits"].items():
        assert entry["passed"], name
    assert summary["wave_amplitude_rate"] == pytest.approx(summary["slowest_mode_rate"], rel=0.03)
    assert (tmp_path / "decay_fit.json").exists()


@pytest.mark.integration
def test_high_mode_wave_rate_matches_eigenvalues(tmp_path):
    """The reported high-mode wave rate is the decay of the oscillating pair, not of the quadratic energy."""
    text = """
[model]
mu = 1.0
n_modes = 8

[initial]
preset = small-data
seed = 3

[integrator]
t_end = 40
dt = 0.02
record_every = 50
"""
    config = config_from_text(text, out_dir=tmp_path, environ={})
    summary = decay_fit(config).summary
    pair = eigen_exact(200, config.params.with_a(summary["theta_inf"])).lambdas[1]
    assert summary["high_mode_wave_rate"] == pytest.approx(-pair.real, rel=1e-6)
    assert (tmp_path / "decay_trajectory.csv").exists()


@pytest.mark.integration
def test_fixed_point_matches_direct_integration(tmp_path):
    """N = 16, T = 5, initial size 1e-3: Picard converges and agrees with etd_rk2 to 1e-4."""
    text = """
[model]
mu = 1.0
n_modes = 16

[initial]
preset = small-data
seed = 11

[duhamel]
t_end = 5
n_split = 8
"""
    config = config_from_text(text, out_dir=tmp_path, environ={})
    summary = duhamel(config).summary
    assert summary["initial_size"] == pytest.approx(1e-3, rel=1e-6)
    assert summary["h"] == pytest.approx(1.0 / 64.0)
    assert summary["max_ratio"] <= 0.9
    assert summary["x_distance_direct"] <= 1e-4
    assert (tmp_path / "duhamel_iterations.csv").exists()


@pytest.mark.integration
@pytest.mark.parametrize("n", [1, 2, 5, 50])
def test_linear_mode_rate(n):
    """A single temperature mode of the linear system decays at the slowest rate of A_{n,a}."""
    params = ModelParams(mu=1.0, a=1.0, n_modes=4)
    rate = -eigen_exact(n, params).max_real_part
    record = run_linear_mode(n, params, np.array([0.0, 0.0, 1.0]), 120.0 / rate, 0.05)
    fit = fit_decay(record.times, record.values)
    assert fit.fitted_rate == pytest.approx(rate, rel=0.02)
