"""
Row builders for every command.

Floats are rounded once, here, so table, csv and json output carry the
same numeric fields.
"""

from dataclasses import dataclass, field

from finitemonkey.core.logdomain import lq_format
from finitemonkey.core.textnorm import normalize, strip_gutenberg_envelope
from finitemonkey.core.waiting import (
    EXACT_BORDER,
    FULL_PRECISION,
    ROUNDED_ENTROPY_RATE,
    ROUNDED_RULE,
    estimate,
    exact_border_sum,
    mode_consistency_bound,
)
from finitemonkey.estimation.entropy import MATCHLEN, NGRAM, estimate_entropy
from finitemonkey.estimation.presets import preset_estimates
from finitemonkey.reporting.gallery import (
    EXTERNAL_INPUT_REQUIRED,
    GalleryEntry,
    builtin_phrases,
    external_entries,
    extra_phrases,
)
from finitemonkey.simulation.farm import simulate_waiting, throughput_benchmark
from finitemonkey.support.config import Config
from finitemonkey.support.exceptions import EmptyTextError, UsageError
from finitemonkey.support.models import MonkeyModel, NormalizedText, TypingSpeed

DECIMALS = 6

# CLI mode -> (educated monkey mode, random monkey mode)
MODE_PLAN = {
    "rounded": (ROUNDED_RULE, FULL_PRECISION),
    "precise": (FULL_PRECISION, FULL_PRECISION),
    "exact": (FULL_PRECISION, EXACT_BORDER),
}


@dataclass
class Report:
    """Rows plus the presentation hints a renderer needs."""

    rows: list[dict]
    title: str | None = None
    footnotes: tuple[str, ...] = ()
    single: bool = False  # one-line JSON record
    notes: list[str] = field(default_factory=list)  # verbose diagnostics


def _round(value: float) -> float:
    return round(float(value), DECIMALS)


def _monkeys(config: Config) -> list[tuple[str, MonkeyModel, str]]:
    educated_mode, random_mode = MODE_PLAN[config.mode]
    if educated_mode == ROUNDED_RULE and config.h != ROUNDED_ENTROPY_RATE:
        educated_mode = FULL_PRECISION
    return [
        ("educated", MonkeyModel.educated(config.h), educated_mode),
        ("random", MonkeyModel.uniform(config.m), random_mode),
    ]


def _mode_footnotes(config: Config, longest: int) -> tuple[str, ...]:
    speed = config.speed()
    notes = [
        f"typing speed: {speed.chars_per_year:,.0f} characters per year "
        f"({config.wpm:g} wpm, {config.chars_per_word:g} chars/word, "
        f"{config.hours_per_day:g} h/day, {config.days_per_year:g} days/year)"
    ]
    if config.mode == "rounded":
        if config.h == ROUNDED_ENTROPY_RATE:
            rule = "educated: rounded rule 7.3×10^(0.26ℓ-9) years"
            if speed != TypingSpeed():
                rule += " at 136,656,000 chars/year, rescaled to this typing speed"
            notes.append(rule)
        else:
            notes.append(
                f"educated: h={config.h:g} is not covered by the rounded rule; "
                "full precision 2^(ℓh) keystrokes"
            )
        notes.append(f"random: full precision {config.m}^ℓ keystrokes")
    elif config.mode == "precise":
        bound = mode_consistency_bound(longest)
        notes.append(
            "precise mode: unrounded coefficients; educated figures differ from "
            f"the rounded rule by up to a factor 10^{bound:.2f}"
        )
    else:
        notes.append("exact mode: random monkey uses the border-sum hitting time")
    return tuple(notes)


def waiting_rows(source: str, text: NormalizedText, config: Config) -> list[dict]:
    """One row per monkey for a normalized text."""
    rows = []
    for name, model, mode in _monkeys(config):
        result = estimate(text, model, config.speed(), mode)
        rows.append(
            {
                "source": source,
                "length": text.length,
                "monkey": name,
                "mode": result.mode,
                "keystrokes": lq_format(result.keystrokes, 3),
                "log10_keystrokes": _round(result.keystrokes.log10),
                "time": result.display,
                "log10_years": _round(result.years.log10),
            }
        )
    return rows


def quote_report(phrase: str, config: Config) -> Report:
    text = normalize(phrase)
    if text.length == 0:
        raise EmptyTextError(f"Phrase {phrase!r} has no letters after normalization")
    return Report(
        rows=waiting_rows(text.content, text, config),
        footnotes=_mode_footnotes(config, text.length),
        notes=[f"normalized: {text.content!r} (ℓ={text.length})"],
    )


def corpus_report(
    source: str, raw: str, config: Config, strip_gutenberg: bool = False
) -> Report:
    if strip_gutenberg:
        raw = strip_gutenberg_envelope(raw)
    text = normalize(raw)
    return Report(
        rows=waiting_rows(source, text, config),
        footnotes=_mode_footnotes(config, text.length),
        notes=[f"normalized length: {text.length:,} characters"],
    )


def _gallery_row(entry: GalleryEntry, config: Config, note: str = "") -> dict:
    text = normalize(entry.text)
    row = {
        "phrase": entry.label,
        "attribution": entry.attribution,
        "length": text.length,
    }
    for name, model, mode in _monkeys(config):
        result = estimate(text, model, config.speed(), mode)
        row[name] = result.display
        row[f"{name}_log10_years"] = _round(result.years.log10)
    row["quoted_educated"] = entry.quoted_educated
    row["quoted_random"] = entry.quoted_random
    row["note"] = note
    return row


def _external_row(entry: GalleryEntry) -> dict:
    return {
        "phrase": entry.label,
        "attribution": entry.attribution,
        "length": None,
        "educated": None,
        "educated_log10_years": None,
        "random": None,
        "random_log10_years": None,
        "quoted_educated": entry.quoted_educated,
        "quoted_random": entry.quoted_random,
        "note": EXTERNAL_INPUT_REQUIRED,
    }


def table_report(config: Config, with_extras: bool = False) -> Report:
    """The phrase gallery with both monkeys' estimates."""
    rows = [_gallery_row(entry, config) for entry in builtin_phrases()]
    rows.extend(_external_row(entry) for entry in external_entries())
    if with_extras:
        rows.extend(
            _gallery_row(entry, config, "supplementary") for entry in extra_phrases()
        )
    longest = max(row["length"] or 0 for row in rows)
    return Report(
        rows=rows,
        title="Waiting times for the phrase gallery",
        footnotes=_mode_footnotes(config, longest),
    )


def estimate_report(
    source: str,
    raw: str,
    method: str,
    config: Config,
    parameter: int | None = None,
    strip_gutenberg: bool = False,
) -> Report:
    if method not in (NGRAM, MATCHLEN):
        raise UsageError(f"unknown estimation method {method!r}")
    if parameter is None:
        parameter = config.ngram_order if method == NGRAM else config.window
    if strip_gutenberg:
        raw = strip_gutenberg_envelope(raw)
    text = normalize(raw, config.alphabet())
    result = estimate_entropy(text, method, parameter, config.workers)
    return Report(
        rows=[
            {
                "source": source,
                "method": result.method,
                "parameter": result.parameter,
                "bits_per_char": _round(result.value),
                "sample_size": result.sample_size,
                "alphabet_size": result.alphabet_size,
            }
        ],
        notes=[f"normalized length: {text.length:,} characters"],
    )


def simulate_report(pattern: str, config: Config) -> Report:
    """Empirical waiting time next to the exact and m^ℓ predictions."""
    if not pattern:
        raise EmptyTextError("simulate needs a nonempty pattern")
    config.alphabet()  # m must name a canonical alphabet
    model = MonkeyModel.uniform(config.m)
    summary = simulate_waiting(
        model, pattern, config.trials, config.seed, config.workers
    )
    exact = exact_border_sum(pattern, config.m)
    rule = config.m ** len(pattern)
    row = {
        "pattern": summary.pattern,
        "source": summary.source,
        "trials": summary.trials,
        "seed": summary.seed,
        "mean": _round(summary.mean),
        "stderr": _round(summary.stderr),
        "min": summary.min,
        "max": summary.max,
        "exact": exact,
        "rule_of_thumb": rule,
        "mean_over_exact": _round(summary.mean / exact),
        "rule_over_exact": _round(rule / exact),
    }
    return Report(
        rows=[row],
        single=True,
        notes=[f"workers: {config.workers}"],
    )


def benchmark_report(config: Config, seconds: float) -> Report:
    model = MonkeyModel.uniform(config.m)
    result = throughput_benchmark(model, seconds, seed=config.seed)
    return Report(
        rows=[
            {
                "source": model.label(),
                "symbols": result.symbols,
                "seconds": _round(result.seconds),
                "symbols_per_second": _round(result.rate),
            }
        ],
        single=True,
    )


def presets_report() -> Report:
    rows = [
        {
            "key": preset.key,
            "method": preset.method,
            "low": preset.low,
            "high": preset.high,
            "value": _round(preset.value),
            "units": preset.units,
            "default": preset.is_default,
            "note": preset.note,
        }
        for preset in preset_estimates()
    ]
    return Report(rows=rows, title="Published entropy-rate estimates for English")
