"""
Config Parser: line-oriented `key = value` run configuration.

`#` starts a comment, blank lines are ignored, unknown or repeated keys are
rejected. Every error names the offending line and key.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from pydantic import ValidationError

from src.domain.model import PopulationMode
from src.presentation.cli.exceptions import ConfigError
from src.presentation.cli.schemas import SweepConfig


def _float_list(text: str) -> List[float]:
    items = [item.strip() for item in text.split(",")]
    if not items or any(not item for item in items):
        raise ValueError(f"expected a comma-separated list of numbers, got '{text}'")
    return [float(item) for item in items]


# config key -> (SweepConfig field or mc.<field>, value parser)
KEY_PARSERS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "z_min": ("z_min", float),
    "z_max": ("z_max", float),
    "z_steps": ("z_steps", int),
    "scale": ("scale", str),
    "z": ("z", float),
    "d": ("d", float),
    "gamma": ("gamma", float),
    "gamma_d_add": ("gamma_d_add_list", _float_list),
    "N": ("N", float),
    "population_model": ("population_model", PopulationMode),
    "population_fixed": ("population_fixed", float),
    "t_end": ("t_end", float),
    "step": ("step", float),
    "mc_samples": ("mc.samples", int),
    "mc_seed": ("mc.seed", int),
    "mc_alpha": ("mc.alpha", float),
    "mc_n_p": ("mc.n_p", float),
    "mc_r_light": ("mc.r_light", float),
    "output_path": ("output_path", str),
}

_FIELD_TO_KEY = {field: key for key, (field, _) in KEY_PARSERS.items()}


def _split_line(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_config(text: str) -> SweepConfig:
    """
    Parse config text into a validated SweepConfig.

    Args:
        text: Config file contents

    Returns:
        SweepConfig with defaults for absent keys

    Raises:
        ConfigError: On unknown keys, malformed values or violated invariants
    """
    values: Dict[str, Any] = {}
    mc_values: Dict[str, Any] = {}
    lines: Dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = _split_line(raw)
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {number}: expected 'key = value', got '{line}'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in KEY_PARSERS:
            raise ConfigError(f"line {number}: unknown key '{key}'", detail={"key": key})
        if key in lines:
            raise ConfigError(
                f"line {number}: duplicate key '{key}' (first set on line {lines[key]})",
                detail={"key": key},
            )
        field, parser = KEY_PARSERS[key]
        try:
            parsed = parser(value)
        except ValueError as e:
            raise ConfigError(
                f"line {number}: malformed value for '{key}': '{value}'", detail={"key": key}
            ) from e
        lines[key] = number
        if field.startswith("mc."):
            mc_values[field[3:]] = parsed
        else:
            values[field] = parsed

    if mc_values:
        if "samples" not in mc_values:
            key = next(k for k in lines if k.startswith("mc_"))
            raise ConfigError(
                f"line {lines[key]}: '{key}' requires mc_samples", detail={"key": key}
            )
        values["mc"] = mc_values

    try:
        return SweepConfig(**values)
    except ValidationError as e:
        raise _config_error(e, lines) from e


def load_config(path: Path) -> SweepConfig:
    """Read and parse a config file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    return parse_config(text)


def _config_error(error: ValidationError, lines: Dict[str, int]) -> ConfigError:
    """Translate the first pydantic error into a line/key message."""
    first = error.errors()[0]
    location = [str(part) for part in first.get("loc", ()) if not isinstance(part, int)]
    message = first.get("msg", "invalid value").removeprefix("Value error, ")

    if location:
        field = ".".join(location)
        key = _FIELD_TO_KEY.get(field, field)
    else:
        key = _first_key_in(message)
    line = lines.get(key)
    where = f"line {line}: " if line is not None else ""
    return ConfigError(f"{where}{key}: {message}", detail={"key": key, "line": line})


def _first_key_in(message: str) -> str:
    """Config key mentioned first in a cross-field error message."""
    positions = []
    for key in KEY_PARSERS:
        match = re.search(rf"\b{re.escape(key)}\b", message)
        if match:
            positions.append((match.start(), key))
    return min(positions)[1] if positions else "config"
