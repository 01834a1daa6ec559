"""
Numerical defaults and the optional JSON settings file.

Module constants are the library defaults. ``Settings`` groups the ones a
user may override from a JSON file passed to ``softguess --config``.
"""

import json
import os
from dataclasses import dataclass, asdict, fields, replace
from typing import Any, Dict, Optional

from .errors import BadParameter

# Sum-to-one tolerance for ingested pmfs
DEFAULT_ATOL = 1e-9

# floor(2^D) snaps to k when D is this close to log2(k)
SNAP_WINDOW = 2.0 ** -40

# Masses below this are treated as exactly zero before exponentiation
ZERO_MASS = 1e-15

# Orders this close to 1 are evaluated as the Shannon limit
SHANNON_WINDOW = 1e-6

# Largest product alphabet / list walk built by the block computations
RUN_BUDGET = 10 ** 7

# Brute-force oracle enumerates ordered partitions up to this alphabet size
ORACLE_MAX_ATOMS = 6

# Allocation solver
SOLVER_DELTA = 1e-7
SOLVER_GAIN = 1e-12
SOLVER_MAX_SWEEPS = 500
VERTEX_LIMIT = 200_000

# |exact/n - predicted| <= ASYMPTOTIC_ENVELOPE * log2(n) / n on the reference
# binary source; regenerate with scripts/calibrate_envelope.py
ASYMPTOTIC_ENVELOPE = 3.0

# Output precision for JSON/CSV reports
SIGNIFICANT_DIGITS = 12

# Worker pool for grid evaluations
MAX_WORKERS = min(8, os.cpu_count() or 4)


@dataclass(frozen=True)
class Settings:
    """User-overridable numerical settings."""
    atol: float = DEFAULT_ATOL
    snap_window: float = SNAP_WINDOW
    run_budget: int = RUN_BUDGET
    oracle_max_atoms: int = ORACLE_MAX_ATOMS
    solver_delta: float = SOLVER_DELTA
    solver_gain: float = SOLVER_GAIN
    solver_max_sweeps: int = SOLVER_MAX_SWEEPS
    vertex_limit: int = VERTEX_LIMIT
    significant_digits: int = SIGNIFICANT_DIGITS
    max_workers: int = MAX_WORKERS

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


DEFAULT_SETTINGS = Settings()


def load_settings(path: Optional[str] = None, **overrides: Any) -> Settings:
    """
    Load settings from a JSON file and apply keyword overrides.

    Args:
        path: JSON file with a flat object of setting names to values, or None
        **overrides: Values that take precedence over the file (None is ignored)

    Returns:
        Settings object

    Raises:
        BadParameter: unknown key, wrong type, or non-positive value
    """
    data: Dict[str, Any] = {}
    if path is not None:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise BadParameter(f"Cannot read settings file {path}: {e}") from e
        if not isinstance(data, dict):
            raise BadParameter(f"Settings file {path} must hold a JSON object")

    data.update({k: v for k, v in overrides.items() if v is not None})

    known = {f.name: f for f in fields(Settings)}
    unknown = sorted(set(data) - set(known))
    if unknown:
        raise BadParameter(f"Unknown settings: {', '.join(unknown)}")

    converted: Dict[str, Any] = {}
    for name, value in data.items():
        target = known[name].type
        try:
            converted[name] = int(value) if target in (int, "int") else float(value)
        except (TypeError, ValueError) as e:
            raise BadParameter(f"Setting {name}={value!r} is not numeric") from e
        if converted[name] <= 0:
            raise BadParameter(f"Setting {name} must be positive, got {value!r}")

    return replace(DEFAULT_SETTINGS, **converted)
