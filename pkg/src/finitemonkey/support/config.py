"""
Configuration management for finitemonkey.

Layers, lowest precedence first: built-in defaults, the
``[tool.finitemonkey]`` table of a pyproject.toml, ``MONKEY_<FIELD>``
environment variables, command-line flags.
"""

import math
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

from finitemonkey.estimation.presets import resolve_entropy_rate
from finitemonkey.support.exceptions import ConfigError, UsageError
from finitemonkey.support.models import Alphabet, TypingSpeed

# Compat for Python < 3.11
if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

ENV_PREFIX = "MONKEY_"
MODES = ("rounded", "precise", "exact")
FORMATS = ("table", "csv", "json")
MAX_ALPHABET_SIZE = 27


@dataclass(frozen=True)
class Config:
    """Configuration settings for finitemonkey."""

    h: float = 0.863
    m: int = 27
    wpm: float = 52.0
    chars_per_word: float = 5.0
    hours_per_day: float = 24.0
    days_per_year: float = 365.0
    mode: str = "rounded"
    format: str = "table"
    trials: int = 10_000
    seed: int = 0
    window: int = 65_536
    ngram_order: int = 3
    workers: int = 1

    def speed(self) -> TypingSpeed:
        return TypingSpeed(
            words_per_minute=self.wpm,
            chars_per_word=self.chars_per_word,
            hours_per_day=self.hours_per_day,
            days_per_year=self.days_per_year,
        )

    def alphabet(self) -> Alphabet:
        """The first m symbols of the canonical 27-character alphabet."""
        if self.m > MAX_ALPHABET_SIZE:
            raise ConfigError(
                "m", self.m, f"alphabet-bound commands need m <= {MAX_ALPHABET_SIZE}"
            )
        return Alphabet.of_size(self.m)


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def _coerce(name: str, value):
    """Convert a raw layer value to the field's type."""
    if name == "h":
        try:
            return resolve_entropy_rate(value)
        except UsageError as e:
            raise ConfigError(name, value, str(e)) from None
    kind = _FIELD_TYPES[name]
    if kind in (int, "int"):
        if isinstance(value, bool):
            raise ConfigError(name, value, "expected an integer")
        try:
            if isinstance(value, float):
                if not value.is_integer():
                    raise ValueError
                return int(value)
            return int(str(value).replace("_", ""))
        except ValueError:
            raise ConfigError(name, value, "expected an integer") from None
    if kind in (float, "float"):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigError(name, value, "expected a number") from None
    return str(value).strip().lower()


def _overlay(config: Config, values: dict) -> Config:
    updates = {
        name: _coerce(name, value)
        for name, value in values.items()
        if name in _FIELD_TYPES and value is not None
    }
    return replace(config, **updates) if updates else config


def load_config(path: Path | None = None) -> Config:
    """
    Load the pyproject layer.
    Args:
        path: Path to config file (pyproject.toml) OR project root directory.
              If None, the current working directory is used.
    """
    if path is None:
        path = Path.cwd()

    if path.is_dir():
        config_path = path / "pyproject.toml"
    else:
        config_path = path

    if not config_path.exists():
        return Config()

    try:
        with open(config_path, "rb") as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError):
        # malformed or unreadable files fall back to defaults
        return Config()

    table = data.get("tool", {}).get("finitemonkey", {})
    if not isinstance(table, dict):
        return Config()
    table = {key.replace("-", "_"): value for key, value in table.items()}
    return _overlay(Config(), table)


def apply_environment(config: Config, environ=None) -> Config:
    """Overlay ``MONKEY_<FIELD>`` variables (e.g. MONKEY_H, MONKEY_WPM)."""
    environ = os.environ if environ is None else environ
    values = {}
    for name in _FIELD_TYPES:
        raw = environ.get(ENV_PREFIX + name.upper())
        if raw is not None and raw.strip() != "":
            values[name] = raw
    return _overlay(config, values)


def apply_arguments(config: Config, arguments: dict) -> Config:
    """Overlay flags that were given explicitly (None means not given)."""
    return _overlay(config, arguments)


def validate(config: Config) -> Config:
    """Check the merged configuration once; raise ConfigError on violations."""
    positive = ("h", "wpm", "chars_per_word", "hours_per_day", "days_per_year")
    for name in positive:
        value = getattr(config, name)
        if not value > 0:
            raise ConfigError(name, value, "must be positive")
        if not math.isfinite(value):
            raise ConfigError(name, value, "must be finite")
    if config.hours_per_day > 24:
        raise ConfigError("hours_per_day", config.hours_per_day, "cannot exceed 24")
    minimums = {
        "m": 2,
        "trials": 1,
        "seed": 0,
        "window": 2,
        "ngram_order": 1,
        "workers": 1,
    }
    for name, low in minimums.items():
        if getattr(config, name) < low:
            raise ConfigError(name, getattr(config, name), f"must be at least {low}")
    if config.mode not in MODES:
        raise ConfigError("mode", config.mode, f"expected one of {', '.join(MODES)}")
    if config.format not in FORMATS:
        raise ConfigError(
            "format", config.format, f"expected one of {', '.join(FORMATS)}"
        )
    return config


def resolve_config(
    path: Path | None = None, arguments: dict | None = None, environ=None
) -> Config:
    """Defaults < pyproject < environment < flags, validated."""
    config = load_config(path)
    config = apply_environment(config, environ)
    config = apply_arguments(config, arguments or {})
    return validate(config)
