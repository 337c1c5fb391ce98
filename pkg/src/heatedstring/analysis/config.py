"""Experiment configuration files.

Grammar::

    file     := { blank | comment | section | entry }
    comment  := ('#' | ';') text
    section  := '[' name ']'
    entry    := key '=' value

Values are integers, floats, booleans (true/false, yes/no, on/off), comma separated lists or bare words.
Every entry belongs to a section; unknown sections or keys, duplicates and unparsable values are errors
reported with the file name and line number.
"""

import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, NamedTuple, Optional, Tuple, Union

from heatedstring.constants import (
    ACCEPT_CONTRACTION,
    ACCEPT_FIXED_POINT_DISTANCE,
    ACCEPT_RATE_FACTOR,
    ACCEPT_THETA0_RATE_FACTOR,
    DEFAULT_S,
    FIT_WINDOW,
    PICARD_MAX_ITER,
    PICARD_TOL,
    SLOPE_TOL,
    SMALL_DATA_SIZE,
    THRESHOLD_SCAN_WINDOW,
)
from heatedstring.exceptions import ConfigError, HeatedStringError
from heatedstring.integrator.types import IntegratorConfig
from heatedstring.spectral.types import ModelParams

OUT_DIR_ENV = "HEATEDSTRING_OUT_DIR"
"""Environment variable naming the default output directory."""

DEFAULT_OUT_DIR = "out"
"""Output directory used when nothing else selects one."""

PRESETS = ("equilibrium", "fourier", "bump", "random-smooth", "small-data", "single-mode", "snapshot")
"""Initial-condition presets."""


class ConfigEntry(NamedTuple):
    """Raw value of one key."""

    text: str
    """Value text, stripped."""
    line: int
    """1-based line number."""


@dataclass
class RawSection:
    """Entries of one section before conversion."""

    name: str
    line: int
    entries: Dict[str, ConfigEntry] = field(default_factory=dict)


def parse_config_text(text: str, source: str = "<string>") -> Dict[str, RawSection]:
    """Split configuration text into sections of raw entries.

    Example:
        >>> raw = parse_config_text("[model]\\nmu = 1.0\\n")
        >>> raw["model"].entries["mu"]
        ConfigEntry(text='1.0', line=2)
    """
    sections: Dict[str, RawSection] = {}
    current: Optional[RawSection] = None
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line[0] in "#;":
            continue
        if line.startswith("["):
            if not line.endswith("]") or len(line) < 3:
                raise ConfigError(f"malformed section header {line!r}", source, number)
            name = line[1:-1].strip()
            if name in sections:
                raise ConfigError(f"duplicate section [{name}]", source, number)
            current = sections[name] = RawSection(name, number)
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"expected 'key = value', got {line!r}", source, number)
        if current is None:
            raise ConfigError(f"entry {key!r} appears before any section", source, number)
        if key in current.entries:
            raise ConfigError(f"duplicate key {key!r} in [{current.name}]", source, number)
        current.entries[key] = ConfigEntry(value.strip(), number)
    return sections


def _to_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(text)


def _to_floats(text: str) -> Tuple[float, ...]:
    return tuple(float(item) for item in text.split(",") if item.strip())


def _to_ints(text: str) -> Tuple[int, ...]:
    return tuple(int(item) for item in text.split(",") if item.strip())


def _to_word(text: str) -> str:
    if not text:
        raise ValueError(text)
    return text


Converter = Callable[[str], Any]

SCHEMA: Dict[str, Dict[str, Converter]] = {
    "model": {"mu": float, "a": float, "n_modes": int, "s": float, "grid_points": int, "allow_any_s": _to_bool},
    "initial": {
        "preset": _to_word,
        "seed": int,
        "amplitude": float,
        "decay_u": float,
        "decay_theta": float,
        "theta0": float,
        "u": _to_floats,
        "v": _to_floats,
        "theta": _to_floats,
        "mode": int,
        "size": float,
        "center": float,
        "width": float,
        "heat": float,
        "snapshot": _to_word,
    },
    "integrator": {"t_end": float, "dt": float, "method": _to_word, "record_every": int},
    "output": {"directory": _to_word},
    "simulate": {"max_energy_drift": float, "snapshot": _to_bool},
    "eigen-report": {"n_values": _to_ints, "n_min": int, "n_max": int, "max_trace_residual": float},
    "asymptotics-verify": {"n_min": int, "n_max": int, "points": int, "tolerance": float},
    "duhamel": {
        "t_end": float,
        "h": float,
        "n_split": int,
        "tol": float,
        "max_iter": int,
        "radius_sizes": _to_floats,
        "max_contraction": float,
        "max_distance": float,
    },
    "decay-fit": {"window": _to_floats, "min_rate_factor": float, "min_theta0_rate_factor": float},
    "thresholds": {"window": int},
}
"""Accepted keys and their converters, per section."""


class InitialSpec(NamedTuple):
    """Initial-condition preset and its options."""

    preset: str = "equilibrium"
    """One of PRESETS."""
    seed: int = 0
    """Seed of the random presets."""
    amplitude: float = 1.0
    """Coefficient scale of the random, bump and single-mode presets."""
    decay_u: float = 3.0
    """Algebraic decay of the displacement coefficients (random presets)."""
    decay_theta: float = 2.0
    """Algebraic decay of the temperature coefficients (random presets)."""
    theta0: float = 1.0
    """Mean temperature; for small-data, the equilibrium temperature theta_inf."""
    u: Tuple[float, ...] = ()
    """Displacement coefficients of the fourier preset."""
    v: Tuple[float, ...] = ()
    """Velocity coefficients of the fourier preset."""
    theta: Tuple[float, ...] = ()
    """Temperature coefficients of the fourier preset."""
    mode: int = 1
    """Excited mode of the single-mode preset."""
    size: float = SMALL_DATA_SIZE
    """Target initial size of the small-data preset."""
    center: float = math.pi / 2
    """Center of the bump."""
    width: float = 1.0
    """Half width of the bump."""
    heat: float = 0.0
    """Height of the temperature pulse added by the bump preset."""
    snapshot: Optional[str] = None
    """Path of the snapshot preset."""


class SimulateOptions(NamedTuple):
    """Options of the simulate command."""

    max_energy_drift: float = 1e-6
    """Largest accepted relative energy drift."""
    snapshot: bool = True
    """Write the final state as a snapshot."""


class EigenReportOptions(NamedTuple):
    """Options of the eigen-report command."""

    n_values: Tuple[int, ...] = ()
    """Explicit modes; when empty the range n_min..n_max is used."""
    n_min: int = 1
    """First mode of the range."""
    n_max: int = 64
    """Last mode of the range."""
    max_trace_residual: float = 1e-9
    """Accepted |lambda_1 + lambda_2 + lambda_3 + n^2| relative to n^2."""


class AsymptoticsOptions(NamedTuple):
    """Options of the asymptotics-verify command."""

    n_min: int = 16
    """Smallest mode of the regression."""
    n_max: int = 1024
    """Largest mode of the regression."""
    points: int = 16
    """Number of geometrically spaced modes."""
    tolerance: float = SLOPE_TOL
    """Accepted deviation of every slope."""


class DuhamelOptions(NamedTuple):
    """Options of the duhamel command."""

    t_end: float = 5.0
    """Length of the time window."""
    h: Optional[float] = None
    """Sample spacing; defaults to the largest accepted step for N modes."""
    n_split: Optional[int] = None
    """First mode treated by the scalar projected equations."""
    tol: float = PICARD_TOL
    """Picard stopping tolerance."""
    max_iter: int = PICARD_MAX_ITER
    """Picard iteration cap."""
    radius_sizes: Tuple[float, ...] = ()
    """Initial sizes probed by the radius scan; empty disables the scan."""
    max_contraction: float = ACCEPT_CONTRACTION
    """Largest accepted contraction ratio."""
    max_distance: float = ACCEPT_FIXED_POINT_DISTANCE
    """Largest accepted X-distance to direct integration."""


class DecayFitOptions(NamedTuple):
    """Options of the decay-fit command."""

    window: Tuple[float, float] = FIT_WINDOW
    """Fit window as fractions of the run."""
    min_rate_factor: float = ACCEPT_RATE_FACTOR
    """Norm rates must reach this multiple of alpha."""
    min_theta0_rate_factor: float = ACCEPT_THETA0_RATE_FACTOR
    """The mean temperature rate must reach this multiple of alpha."""


class ThresholdOptions(NamedTuple):
    """Options of the thresholds command."""

    window: int = THRESHOLD_SCAN_WINDOW
    """Number of consecutive modes verified past N0."""


@dataclass(frozen=True)
class ExperimentConfig:
    """A parsed and validated experiment."""

    params: ModelParams
    """Model parameters."""
    initial: InitialSpec
    """Initial condition."""
    integrator: Optional[IntegratorConfig]
    """Time stepping; absent when the file has no [integrator] section."""
    out_dir: Path
    """Directory receiving every output file."""
    source: str = "<string>"
    """Where the configuration came from."""
    simulate: SimulateOptions = SimulateOptions()
    eigen_report: EigenReportOptions = EigenReportOptions()
    asymptotics: AsymptoticsOptions = AsymptoticsOptions()
    duhamel: DuhamelOptions = DuhamelOptions()
    decay_fit: DecayFitOptions = DecayFitOptions()
    thresholds: ThresholdOptions = ThresholdOptions()

    def require_integrator(self) -> IntegratorConfig:
        """The integrator section, or a ConfigError naming the file."""
        if self.integrator is None:
            raise ConfigError("missing [integrator] section", self.source)
        return self.integrator


def _convert(raw: Dict[str, RawSection], source: str) -> Dict[str, Dict[str, Any]]:
    values: Dict[str, Dict[str, Any]] = {}
    for name, section in raw.items():
        schema = SCHEMA.get(name)
        if schema is None:
            raise ConfigError(f"unknown section [{name}]", source, section.line)
        converted = values[name] = {}
        for key, entry in section.entries.items():
            converter = schema.get(key)
            if converter is None:
                raise ConfigError(f"unknown key {key!r} in [{name}]", source, entry.line)
            try:
                converted[key] = converter(entry.text)
            except ValueError as exc:
                raise ConfigError(f"invalid value for {name}.{key}: {entry.text!r}", source, entry.line) from exc
    return values


def _line_of(raw: Dict[str, RawSection], section: str) -> Optional[int]:
    return raw[section].line if section in raw else None


def config_from_text(
    text: str,
    source: str = "<string>",
    seed: Optional[int] = None,
    out_dir: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
    base_dir: Optional[Path] = None,
) -> ExperimentConfig:
    """Parse and validate an experiment.

    Args:
        text: Configuration text.
        source: Name used in error messages.
        seed: Overrides ``[initial] seed``.
        out_dir: Overrides ``[output] directory``.
        environ: Environment consulted for HEATEDSTRING_OUT_DIR; defaults to ``os.environ``.
        base_dir: Directory that relative snapshot paths are resolved against.

    Raises:
        ConfigError: On any syntax or validation problem.
    """
    environ = os.environ if environ is None else environ
    raw = parse_config_text(text, source)
    values = _convert(raw, source)
    if "model" not in values:
        raise ConfigError("missing [model] section", source)
    model = values["model"]
    for required in ("mu", "n_modes"):
        if required not in model:
            raise ConfigError(f"missing key {required!r} in [model]", source, _line_of(raw, "model"))
    try:
        params = ModelParams(
            mu=model["mu"],
            a=model.get("a", 1.0),
            n_modes=model["n_modes"],
            s=model.get("s", DEFAULT_S),
            grid_points=model.get("grid_points", 0),
            allow_any_s=model.get("allow_any_s", False),
        )
    except HeatedStringError as exc:
        raise ConfigError(f"invalid [model]: {exc}", source, _line_of(raw, "model")) from exc

    initial = InitialSpec(**values.get("initial", {}))
    if initial.preset not in PRESETS:
        raise ConfigError(
            f"unknown preset {initial.preset!r}, expected one of {', '.join(PRESETS)}",
            source,
            raw["initial"].entries["preset"].line,
        )
    if seed is not None:
        initial = initial._replace(seed=int(seed))
    if initial.snapshot is not None and base_dir is not None and not Path(initial.snapshot).is_absolute():
        initial = initial._replace(snapshot=str(base_dir / initial.snapshot))

    integrator = None
    if "integrator" in values:
        section = values["integrator"]
        try:
            integrator = IntegratorConfig(**section)
        except TypeError as exc:
            raise ConfigError("[integrator] needs t_end and dt", source, _line_of(raw, "integrator")) from exc
        except HeatedStringError as exc:
            raise ConfigError(f"invalid [integrator]: {exc}", source, _line_of(raw, "integrator")) from exc

    if out_dir is None:
        out_dir = values.get("output", {}).get("directory") or environ.get(OUT_DIR_ENV) or DEFAULT_OUT_DIR

    decay_fit = values.get("decay-fit", {})
    if "window" in decay_fit:
        window = decay_fit["window"]
        if len(window) != 2 or not 0 <= window[0] < window[1] <= 1:
            raise ConfigError(
                "decay-fit.window must be two increasing fractions of the run",
                source,
                raw["decay-fit"].entries["window"].line,
            )

    return ExperimentConfig(
        params=params,
        initial=initial,
        integrator=integrator,
        out_dir=Path(out_dir),
        source=source,
        simulate=SimulateOptions(**values.get("simulate", {})),
        eigen_report=EigenReportOptions(**values.get("eigen-report", {})),
        asymptotics=AsymptoticsOptions(**values.get("asymptotics-verify", {})),
        duhamel=DuhamelOptions(**values.get("duhamel", {})),
        decay_fit=DecayFitOptions(**decay_fit),
        thresholds=ThresholdOptions(**values.get("thresholds", {})),
    )


def load_config(
    path: Union[str, Path],
    seed: Optional[int] = None,
    out_dir: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> ExperimentConfig:
    """Read and validate an experiment file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read configuration: {exc.strerror}", str(path)) from exc
    return config_from_text(text, str(path), seed=seed, out_dir=out_dir, environ=environ, base_dir=path.parent)
