"""End-to-end runs of the heatedstring command line."""

import csv
import json

import pytest

from heatedstring.analysis.cli import EXIT_ACCEPTANCE, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main
from heatedstring.integrator.io import TRAJECTORY_COLUMNS, load_snapshot

from ..utils import write_config

SIMULATE = """
[model]
mu = 1.0
n_modes = 8

[initial]
preset = random-smooth
amplitude = 0.1

[integrator]
t_end = 0.5
dt = 0.01
record_every = 10
"""


@pytest.mark.integration
def test_simulate_writes_outputs(tmp_path):
    """simulate writes the trajectory CSV, the final snapshot and a summary."""
    config = write_config(tmp_path, SIMULATE)
    out = tmp_path / "out"
    assert main(["simulate", "--config", str(config), "--out", str(out), "--seed", "5"]) == EXIT_OK
    with (out / "trajectory.csv").open(newline="") as handle:
        rows = list(csv.reader(handle))
    assert tuple(rows[0]) == TRAJECTORY_COLUMNS
    assert len(rows) == 1 + 6
    snapshot = load_snapshot(out / "final.snap")
    assert snapshot.t == pytest.approx(0.5)
    summary = json.loads((out / "simulate.json").read_text())
    assert summary["records"] == 6
    assert summary["max_energy_drift"] <= 1e-6


@pytest.mark.integration
def test_simulate_is_deterministic(tmp_path):
    """The same configuration and seed produce identical files."""
    config = write_config(tmp_path, SIMULATE)
    for name in ("first", "second"):
        assert main(["simulate", "--config", str(config), "--out", str(tmp_path / name), "--seed", "9"]) == EXIT_OK
    for output in ("trajectory.csv", "simulate.json", "final.snap"):
        assert (tmp_path / "first" / output).read_bytes() == (tmp_path / "second" / output).read_bytes()


@pytest.mark.integration
def test_snapshot_restart(tmp_path):
    """A final snapshot can seed the next run."""
    first = write_config(tmp_path, SIMULATE)
    assert main(["simulate", "--config", str(first), "--out", str(tmp_path / "a")]) == EXIT_OK
    text = SIMULATE.replace("preset = random-smooth\namplitude = 0.1", "preset = snapshot\nsnapshot = a/final.snap")
    second = write_config(tmp_path, text, name="restart.cfg")
    assert main(["simulate", "--config", str(second), "--out", str(tmp_path / "b")]) == EXIT_OK
    restarted = load_snapshot(tmp_path / "b" / "final.snap")
    assert restarted.state.n_modes == 8


@pytest.mark.integration
def test_thresholds_command(tmp_path):
    """thresholds reports N0, alpha and the slowest mode rate as sorted JSON."""
    config = write_config(tmp_path, "[model]\nmu = 1.0\nn_modes = 8\n")
    assert main(["thresholds", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
    summary = json.loads((tmp_path / "thresholds.json").read_text())
    assert summary["N0"] == 2304
    assert summary["alpha2"] == pytest.approx(0.25)
    assert summary["alpha"] == summary["alpha1"]
    assert list(summary) == sorted(summary)


@pytest.mark.integration
def test_eigen_report_command(tmp_path):
    """eigen-report writes one row per requested mode."""
    config = write_config(tmp_path, "[model]\nmu = 1.0\nn_modes = 8\n[eigen-report]\nn_min = 1\nn_max = 32\n")
    assert main(["eigen-report", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
    with (tmp_path / "eigen_report.csv").open(newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert [int(row["n"]) for row in rows] == list(range(1, 33))
    assert all(float(row["re_lambda1"]) < 0 for row in rows)


@pytest.mark.integration
def test_asymptotics_command(tmp_path):
    """asymptotics-verify passes away from the degenerate couplings."""
    config = write_config(tmp_path, "[model]\nmu = 1.0\na = 2.0\nn_modes = 8\n")
    assert main(["asymptotics-verify", "--config", str(config), "--out", str(tmp_path)]) == EXIT_OK
    with (tmp_path / "asymptotics.csv").open(newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 7
    assert all(row["passed"] == "True" for row in rows)


@pytest.mark.integration
def test_acceptance_failure_exit_status(tmp_path):
    """A Picard solve that cannot finish in one iteration fails acceptance with status 2."""
    text = (
        "[model]\nmu = 1.0\nn_modes = 8\n"
        "[initial]\npreset = small-data\n"
        "[duhamel]\nt_end = 0.25\nmax_iter = 1\n"
    )
    config = write_config(tmp_path, text)
    assert main(["duhamel", "--config", str(config), "--out", str(tmp_path)]) == EXIT_ACCEPTANCE
    assert (tmp_path / "duhamel_iterations.csv").exists()


@pytest.mark.integration
def test_configuration_errors_exit_status(tmp_path, caplog):
    """Bad or missing configuration files give status 1 and name the line."""
    config = write_config(tmp_path, "[model]\nmu = 1.0\nn_modes = 8\nnoise = 1\n")
    assert main(["thresholds", "--config", str(config)]) == EXIT_USAGE
    assert f"{config}:4:" in caplog.text
    assert main(["thresholds", "--config", str(tmp_path / "absent.cfg")]) == EXIT_USAGE
    assert main(["simulate", "--config", str(write_config(tmp_path, "[model]\nmu = 1\nn_modes = 8\n"))]) == EXIT_USAGE


@pytest.mark.integration
def test_usage_errors_exit_status(tmp_path):
    """Unknown commands and missing options exit with status 1."""
    with pytest.raises(SystemExit) as info:
        main(["wiggle", "--config", str(tmp_path / "x.cfg")])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["simulate"])
    assert info.value.code == EXIT_USAGE


@pytest.mark.integration
def test_numerical_failure_exit_status(tmp_path):
    """An rk4 step above the stability margin is a numerical failure."""
    text = SIMULATE.replace("dt = 0.01", "dt = 0.1\nmethod = rk4")
    config = write_config(tmp_path, text)
    assert main(["simulate", "--config", str(config), "--out", str(tmp_path / "out")]) == EXIT_NUMERICAL
