"""
Published estimates of the entropy rate of English.
"""

from finitemonkey.support.exceptions import UsageError
from finitemonkey.support.models import PresetEstimate

DEFAULT_PRESET = "default"

_PRESETS = (
    PresetEstimate(
        "ngram-guessing",
        "n-gram frequencies and next-letter guessing (1951)",
        0.6,
        1.3,
    ),
    PresetEstimate(
        "gambling", "human subjects betting on the next character (1978)", 1.29, 1.9
    ),
    PresetEstimate(
        "guessing-replication", "large-scale guessing replication (2019)", 1.22, 1.22
    ),
    PresetEstimate(
        "compression", "match-length and data-compression estimators", 0.92, 2.15
    ),
    PresetEstimate(
        "ppm", "prediction by partial matching with extrapolation", 1.13, 1.13
    ),
    PresetEstimate(
        "hutter",
        "compression contest on enwik9",
        0.887,
        0.887,
        units="bits/byte",
        note="file-specific; markup and mixed case included",
    ),
    PresetEstimate(
        DEFAULT_PRESET,
        "large language model compression",
        0.863,
        0.863,
        note="used by the rounded rule",
        is_default=True,
    ),
)


def preset_estimates() -> tuple[PresetEstimate, ...]:
    return _PRESETS


def lookup_preset(key: str) -> PresetEstimate:
    """Find a preset row by key (case-insensitive)."""
    wanted = key.strip().lower()
    for preset in _PRESETS:
        if preset.key == wanted:
            return preset
    known = ", ".join(p.key for p in _PRESETS)
    raise UsageError(f"unknown entropy preset {key!r}; known presets: {known}")


def resolve_entropy_rate(value) -> float:
    """A number, a numeric string, or a preset key, as bits per character."""
    if isinstance(value, (int, float)):
        return float(value)
    try:
        return float(value)
    except ValueError:
        return lookup_preset(value).value
