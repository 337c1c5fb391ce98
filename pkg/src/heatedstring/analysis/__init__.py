"""Experiment configuration, presets, decay fits and the command line."""

from heatedstring.analysis.commands import COMMANDS, CommandResult
from heatedstring.analysis.config import ExperimentConfig, InitialSpec, config_from_text, load_config
from heatedstring.analysis.fit import DecayFit, default_window, fit_decay
from heatedstring.analysis.presets import initial_state

__all__ = [
    "COMMANDS",
    "CommandResult",
    "DecayFit",
    "ExperimentConfig",
    "InitialSpec",
    "config_from_text",
    "default_window",
    "fit_decay",
    "initial_state",
    "load_config",
]
