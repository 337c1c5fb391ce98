"""The analysis commands.

Every command writes its files into ``config.out_dir`` and returns a CommandResult. A command whose
acceptance criterion fails still writes its outputs and then raises AcceptanceError.
"""

import csv
import json
import logging
import math
from pathlib import Path
from typing import Any, Callable, Dict, List, NamedTuple, Sequence

import numpy as np

from heatedstring.analysis.config import ExperimentConfig
from heatedstring.analysis.fit import DecayFit, default_window, fit_decay
from heatedstring.analysis.presets import initial_state
from heatedstring.constants import DUHAMEL_MAX_STEP_PHASE, FIT_FLOOR, SMALL_DATA_SIZE
from heatedstring.exceptions import AcceptanceError, DivergenceError
from heatedstring.integrator.io import save_snapshot, write_trajectory_csv
from heatedstring.integrator.run import run
from heatedstring.integrator.types import IntegratorConfig
from heatedstring.linear.report import asymptotic_slopes, spectral_table
from heatedstring.linear.thresholds import slowest_rate, thresholds
from heatedstring.projections.fixed_point import IterationRecord, empirical_radius, fixed_point_solve
from heatedstring.projections.norms import initial_size, x_distance
from heatedstring.projections.state import project_trajectory, to_projection
from heatedstring.spectral.norms import theta_infinity, wave_energy

logger = logging.getLogger("heatedstring.analysis.cli")

NORM_SERIES = ("hs_theta_dev", "hs_u_t", "hs_u_x")
"""Norms whose decay rates must reach the guaranteed alpha."""


class CommandResult(NamedTuple):
    """Outcome of a command."""

    name: str
    """Command name."""
    outputs: List[Path]
    """Files written."""
    summary: Dict[str, Any]
    """Headline numbers, also logged."""


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    return value


def write_json(path: Path, payload: Dict[str, Any]) -> Path:
    """Write ``payload`` with sorted keys; non-finite floats become null."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n")
    return path


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
    """Write rows under an exact header; floats use their shortest round-trip repr."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(item)) if isinstance(item, (float, np.floating)) else item for item in row])
    return path


def _fail_if(failures: List[str], command: str) -> None:
    if failures:
        raise AcceptanceError(f"{command} failed: " + "; ".join(failures))


def simulate(config: ExperimentConfig) -> CommandResult:
    """Integrate the initial state and write the trajectory CSV and the final snapshot.

    Fails acceptance when the relative energy drift exceeds ``[simulate] max_energy_drift``.
    """
    integrator = config.require_integrator()
    state = initial_state(config.initial, config.params)
    record = run(state, config.params, integrator)
    outputs = [write_trajectory_csv(record, config.out_dir / "trajectory.csv")]
    if config.simulate.snapshot:
        outputs.append(save_snapshot(record.final, config.params, record.times[-1], config.out_dir / "final.snap"))
    energies = record.series("energy")
    scale = abs(energies[0])
    drift = float(np.max(np.abs(energies - energies[0])))
    drift = drift / scale if scale > 0 else drift
    summary = {
        "preset": config.initial.preset,
        "method": integrator.method,
        "theta_inf": record.theta_inf,
        "t_end": record.times[-1],
        "records": len(record.times),
        "max_energy_drift": drift,
        "min_theta": min(n.min_theta for n in record.norms if n.min_theta is not None),
    }
    outputs.append(write_json(config.out_dir / "simulate.json", summary))
    logger.info("simulate: energy drift %.3e over %d records", drift, len(record.times))
    result = CommandResult("simulate", outputs, summary)
    _fail_if(
        [f"energy drift {drift:.3e} exceeds {config.simulate.max_energy_drift:g}"]
        if drift > config.simulate.max_energy_drift
        else [],
        "simulate",
    )
    return result


def eigen_report(config: ExperimentConfig) -> CommandResult:
    """Write the per-mode spectral table; fails if an eigenvalue is not in the left half plane."""
    options = config.eigen_report
    ns = list(options.n_values) or list(range(options.n_min, options.n_max + 1))
    rows = spectral_table(config.params, ns)
    failures = []
    table = []
    for row in rows:
        lambdas = np.array([row.lambda1, row.lambda2, row.lambda3])
        trace_residual = abs(complex(np.sum(lambdas)) + row.n**2)
        flat = row.as_dict()
        flat["trace_residual"] = trace_residual
        table.append(flat)
        if np.max(lambdas.real) >= 0:
            failures.append(f"n={row.n}: eigenvalue with Re >= 0")
        if trace_residual > options.max_trace_residual * row.n**2:
            failures.append(f"n={row.n}: trace residual {trace_residual:.3e}")
    header = list(table[0])
    path = write_csv(config.out_dir / "eigen_report.csv", header, [[flat[key] for key in header] for flat in table])
    summary = {"modes": len(rows), "failures": len(failures)}
    logger.info("eigen-report: %d modes, %d failures", len(rows), len(failures))
    result = CommandResult("eigen-report", [path], summary)
    _fail_if(failures[:10], "eigen-report")
    return result


def asymptotics_verify(config: ExperimentConfig) -> CommandResult:
    """Regress the leading-order errors against n on a geometric grid and check the slopes."""
    options = config.asymptotics
    ns = np.unique(np.round(np.geomspace(options.n_min, options.n_max, options.points)).astype(int))
    checks = asymptotic_slopes(config.params, [int(n) for n in ns], options.tolerance)
    path = write_csv(
        config.out_dir / "asymptotics.csv",
        ("name", "slope", "expected", "tolerance", "passed"),
        [(c.name, c.slope, c.expected, c.tolerance, c.passed) for c in checks],
    )
    summary = {c.name: c.slope for c in checks}
    for check in checks:
        logger.info("asymptotics: %s slope %.3f (expected %g)", check.name, check.slope, check.expected)
    result = CommandResult("asymptotics-verify", [path], summary)
    _fail_if(
        [
            f"{c.name} slope {c.slope:.3f} is not within {c.tolerance:g} of {c.expected:g}"
            for c in checks
            if not c.passed
        ],
        "asymptotics-verify",
    )
    return result


def _iteration_rows(history: Sequence[IterationRecord]) -> List[tuple]:
    return [(rec.iteration, rec.x_norm_diff, rec.ratio) for rec in history]


def duhamel(config: ExperimentConfig) -> CommandResult:
    """Solve for the Duhamel fixed point by Picard iteration and compare it with direct integration."""
    options = config.duhamel
    params = config.params
    state = initial_state(config.initial, params)
    theta_inf = theta_infinity(state)
    h = options.h if options.h is not None else DUHAMEL_MAX_STEP_PHASE / params.n_modes
    steps = max(1, int(math.ceil(options.t_end / h - 1e-9)))
    h = options.t_end / steps
    alpha = thresholds(params, theta_inf).alpha
    outputs: List[Path] = []
    try:
        result = fixed_point_solve(
            state,
            params,
            theta_inf,
            options.t_end,
            h,
            tol=options.tol,
            n_split=options.n_split,
            alpha=alpha,
            max_iter=options.max_iter,
        )
    except DivergenceError as exc:
        rows = [(k + 1, float("nan"), ratio) for k, ratio in enumerate(exc.ratios)]
        header = ("iteration", "x_norm_diff", "ratio")
        outputs.append(write_csv(config.out_dir / "duhamel_iterations.csv", header, rows))
        raise AcceptanceError(f"duhamel failed: {exc}") from exc

    lin = params.with_a(theta_inf)
    size = initial_size(to_projection(state, lin, result.basis), lin, theta_inf)
    if size > 10 * SMALL_DATA_SIZE:
        logger.warning("initial size %.3e is far outside the small-data regime", size)
    direct = run(state, params, IntegratorConfig(t_end=options.t_end, dt=h))
    direct_projected = project_trajectory(direct.states, result.trajectory.times, lin, result.basis)
    distance = x_distance(result.trajectory, direct_projected, lin.s, alpha)
    outputs.append(
        write_csv(
            config.out_dir / "duhamel_iterations.csv",
            ("iteration", "x_norm_diff", "ratio"),
            _iteration_rows(result.history),
        )
    )
    summary = {
        "initial_size": size,
        "theta_inf": theta_inf,
        "alpha": alpha,
        "h": h,
        "n_split": result.basis.n_split,
        "iterations": result.iterations,
        "max_ratio": result.max_ratio,
        "x_distance_direct": distance,
    }
    if options.radius_sizes:
        probes = empirical_radius(
            state, params, theta_inf, options.t_end, h, options.radius_sizes, n_split=result.basis.n_split, alpha=alpha
        )
        outputs.append(
            write_csv(
                config.out_dir / "radius.csv",
                ("size", "converged", "iterations", "max_ratio"),
                [(p.size, p.converged, p.iterations, p.max_ratio) for p in probes],
            )
        )
        converged = [p.size for p in probes if p.converged]
        summary["empirical_radius"] = max(converged) if converged else 0.0
    outputs.append(write_json(config.out_dir / "duhamel.json", summary))
    logger.info(
        "duhamel: %d iterations, max ratio %.3g, distance to direct integration %.3e",
        result.iterations,
        result.max_ratio,
        distance,
    )
    failures = []
    if np.isfinite(result.max_ratio) and result.max_ratio > options.max_contraction:
        failures.append(f"contraction ratio {result.max_ratio:.3g} exceeds {options.max_contraction:g}")
    if distance > options.max_distance:
        failures.append(f"distance to direct integration {distance:.3e} exceeds {options.max_distance:g}")
    command_result = CommandResult("duhamel", outputs, summary)
    _fail_if(failures, "duhamel")
    return command_result


def _fit_entry(fit: DecayFit, required: float) -> Dict[str, Any]:
    return {
        "window": list(fit.window),
        "fitted_rate": fit.fitted_rate,
        "r_squared": fit.r_squared,
        "required_rate": required,
        "passed": fit.fitted_rate >= required,
    }


def decay_fit(config: ExperimentConfig) -> CommandResult:
    """Run the nonlinear system and compare fitted decay rates with alpha from the thresholds."""
    options = config.decay_fit
    params = config.params
    integrator = config.require_integrator()
    state = initial_state(config.initial, params)
    record = run(state, params, integrator)
    theta_inf = record.theta_inf
    report = thresholds(params, theta_inf)
    alpha = report.alpha
    slowest = slowest_rate(params.with_a(theta_inf))
    times = np.array(record.times)

    fits: Dict[str, Any] = {}
    for name in NORM_SERIES:
        values = record.series(name)
        fit = fit_decay(times, values, default_window(times, values, options.window), alpha, slowest)
        fits[name] = _fit_entry(fit, options.min_rate_factor * alpha)
    theta0_values = record.series("theta0_dev")
    floor = FIT_FLOOR * max(1.0, theta_inf)
    fit = fit_decay(times, theta0_values, default_window(times, theta0_values, options.window, floor), alpha, slowest)
    fits["theta0_dev"] = _fit_entry(fit, options.min_theta0_rate_factor * alpha)
    amplitude = np.sqrt([wave_energy(s) for s in record.states])
    amplitude_fit = fit_decay(times, amplitude, default_window(times, amplitude, options.window))

    summary = {
        "preset": config.initial.preset,
        "theta_inf": theta_inf,
        "alpha": alpha,
        "alpha1": report.alpha1,
        "alpha2": report.alpha2,
        "N0": report.N0,
        "slowest_mode_rate": slowest,
        "fits": fits,
        "wave_amplitude_rate": amplitude_fit.fitted_rate,
        "high_mode_wave_rate": params.mu**2 * theta_inf / 2.0,
    }
    outputs = [
        write_trajectory_csv(record, config.out_dir / "decay_trajectory.csv"),
        write_json(config.out_dir / "decay_fit.json", summary),
    ]
    for name, entry in fits.items():
        logger.info("decay-fit: %s rate %.4g (required %.4g)", name, entry["fitted_rate"], entry["required_rate"])
    logger.info(
        "decay-fit: wave amplitude rate %.4g (slowest mode %.4g, high modes %.4g)",
        amplitude_fit.fitted_rate,
        slowest,
        summary["high_mode_wave_rate"],
    )
    result = CommandResult("decay-fit", outputs, summary)
    _fail_if(
        [
            f"{name} rate {entry['fitted_rate']:.4g} is below {entry['required_rate']:.4g}"
            for name, entry in fits.items()
            if not entry["passed"]
        ],
        "decay-fit",
    )
    return result


def thresholds_command(config: ExperimentConfig) -> CommandResult:
    """Write N0, alpha1, alpha2 and alpha for theta_infinity of the initial state."""
    params = config.params
    state = initial_state(config.initial, params)
    theta_inf = theta_infinity(state)
    report = thresholds(params, theta_inf, config.thresholds.window)
    summary = dict(report._asdict())
    summary["slowest_mode_rate"] = slowest_rate(params.with_a(theta_inf))
    path = write_json(config.out_dir / "thresholds.json", summary)
    return CommandResult("thresholds", [path], summary)


COMMANDS: Dict[str, Callable[[ExperimentConfig], CommandResult]] = {
    "simulate": simulate,
    "eigen-report": eigen_report,
    "asymptotics-verify": asymptotics_verify,
    "duhamel": duhamel,
    "decay-fit": decay_fit,
    "thresholds": thresholds_command,
}
"""Command names and their implementations."""
