"""Agent-based simulation of tertiary-education enrollment."""

from ._core import (
    ConfigError,
    Params,
    monte_carlo,
    oat_sensitivity,
    param_paths,
    run,
    scenarios,
    welch_t,
)

__all__ = [
    "ConfigError",
    "Params",
    "monte_carlo",
    "oat_sensitivity",
    "param_paths",
    "run",
    "scenarios",
    "welch_t",
]
