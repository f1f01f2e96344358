"""
Expected keystrokes and calendar time for random and educated monkeys.

Three computation modes are kept apart and recorded on every estimate:

- ``rounded_rule``: 7.3 × 10^(cℓ - 9) years with c = 0.26 (educated,
  h = 0.863) or c = 1.43 (uniform, m = 27), the published display form.
- ``full_precision``: 2^(ℓh) or m^ℓ keystrokes converted at the typing
  speed.
- ``exact_border``: the border-sum hitting time of an i.i.d. source.
"""

import math

import numpy as np

from finitemonkey.core.logdomain import (
    LogQuantity,
    exact_power,
    lq_div,
    lq_format,
    lq_from,
    lq_mul,
    lq_pow,
    lq_sum,
)
from finitemonkey.core.matcher import borders, failure_function
from finitemonkey.support.exceptions import (
    InputError,
    ModelError,
    PatternAlphabetError,
    RoundedRuleError,
)
from finitemonkey.support.models import (
    MonkeyModel,
    NormalizedText,
    TypingSpeed,
    WaitingEstimate,
)

ROUNDED_RULE = "rounded_rule"
FULL_PRECISION = "full_precision"
EXACT_BORDER = "exact_border"
MODES = (ROUNDED_RULE, FULL_PRECISION, EXACT_BORDER)

ROUNDED_PREFACTOR = 7.3
ROUNDED_OFFSET = -9
ROUNDED_EDUCATED_SLOPE = 0.26
ROUNDED_RANDOM_SLOPE = 1.43
ROUNDED_ALPHABET_SIZE = 27
ROUNDED_ENTROPY_RATE = 0.863

AGE_OF_UNIVERSE_YEARS = 1.4e10
BLACK_HOLE_ERA_LOG10_YEARS = 106.0

_LOG10_2 = math.log10(2.0)


def keystrokes_random(length: int, m: int) -> LogQuantity:
    """m^ℓ keystrokes."""
    if length < 0 or m < 2:
        raise ModelError("keystrokes_random needs length >= 0 and m >= 2")
    return lq_pow(lq_from(m), length)


def keystrokes_educated(length: int, h: float) -> LogQuantity:
    """2^(ℓh) keystrokes."""
    if length < 0 or not h > 0:
        raise ModelError("keystrokes_educated needs length >= 0 and h > 0")
    return LogQuantity(length * h * _LOG10_2)


def keystrokes_to_time(keystrokes: LogQuantity, speed: TypingSpeed) -> LogQuantity:
    """Years needed to type the given number of keystrokes."""
    return lq_div(keystrokes, lq_from(speed.chars_per_year))


def _rounded_slope(model: MonkeyModel) -> float:
    if model.kind == "educated" and model.entropy_rate == ROUNDED_ENTROPY_RATE:
        return ROUNDED_EDUCATED_SLOPE
    if model.kind == "uniform" and model.alphabet_size == ROUNDED_ALPHABET_SIZE:
        return ROUNDED_RANDOM_SLOPE
    raise RoundedRuleError(
        f"the rounded rule only covers uniform(m={ROUNDED_ALPHABET_SIZE}) and "
        f"educated(h={ROUNDED_ENTROPY_RATE}); got {model.label()}, "
        "use full precision instead"
    )


def rounded_rule_years(length: int, model: MonkeyModel) -> LogQuantity:
    """7.3 × 10^(cℓ - 9) years, reproduced with the published rounding."""
    slope = _rounded_slope(model)
    return LogQuantity(
        math.log10(ROUNDED_PREFACTOR) + slope * length + ROUNDED_OFFSET
    )


def _symbol_log_probs(model: MonkeyModel, text: str) -> list[float]:
    alphabet = model.alphabet()
    stray = "".join(sorted({ch for ch in text if ch not in alphabet}))
    if stray:
        raise PatternAlphabetError(text, stray)
    probs = model.symbol_probabilities()
    return [math.log10(probs[i]) for i in alphabet.encode(text)]


def _full_precision_keystrokes(text: NormalizedText, model: MonkeyModel) -> LogQuantity:
    if model.kind == "educated":
        return keystrokes_educated(text.length, model.entropy_rate)
    if model.kind == "uniform":
        return keystrokes_random(text.length, model.alphabet_size)
    # i.i.d. general: 1 / P(text), the leading border term
    return LogQuantity(-math.fsum(_symbol_log_probs(model, text.content)))


def exact_expected_wait(pattern: NormalizedText, model: MonkeyModel) -> LogQuantity:
    """
    Exact expected keystrokes until ``pattern`` first appears under an
    i.i.d. source: sum over border lengths j of 1 / P(first j symbols).
    """
    if not model.is_iid:
        raise ModelError("exact waiting times need an i.i.d. monkey")
    if pattern.length == 0:
        raise InputError("exact waiting time needs a nonempty pattern")
    log_probs = _symbol_log_probs(model, pattern.content)
    prefix = np.cumsum([0.0] + log_probs)
    lengths = sorted(borders(pattern.content))
    return lq_sum(LogQuantity(-float(prefix[j])) for j in lengths)


def exact_border_sum(pattern: str, m: int) -> int:
    """Exact integer border sum Σ m^j for a uniform source (test oracle)."""
    return sum(exact_power(m, j) for j in borders(pattern))


def absorbing_chain_wait(pattern: NormalizedText, model: MonkeyModel) -> float:
    """
    Expected hitting time from the absorbing Markov chain over the
    pattern automaton, solved as (I - Q) t = 1.
    """
    if not model.is_iid:
        raise ModelError("the absorbing-chain solve needs an i.i.d. monkey")
    alphabet = model.alphabet()
    stray = "".join(sorted({ch for ch in pattern.content if ch not in alphabet}))
    if stray:
        raise PatternAlphabetError(pattern.content, stray)
    codes = alphabet.encode(pattern.content)
    failure = failure_function(codes)
    probs = model.symbol_probabilities()
    n = len(codes)

    q = np.zeros((n, n))
    for state in range(n):
        for symbol, p in enumerate(probs):
            k = state
            while k > 0 and symbol != codes[k]:
                k = failure[k]
            if symbol == codes[k]:
                k += 1
            if k < n:
                q[state, k] += p
    t = np.linalg.solve(np.eye(n) - q, np.ones(n))
    return float(t[0])


def estimate(
    text: NormalizedText,
    model: MonkeyModel,
    speed: TypingSpeed | None = None,
    mode: str = ROUNDED_RULE,
) -> WaitingEstimate:
    """Keystrokes, years and a display string for one text and monkey."""
    speed = speed or TypingSpeed()
    if mode not in MODES:
        raise ModelError(f"unknown mode {mode!r}; expected one of {MODES}")

    # the rounded rule is a display fit; an empty text costs one keystroke
    if mode == ROUNDED_RULE and text.length == 0:
        mode = FULL_PRECISION

    if mode == ROUNDED_RULE:
        if text.alphabet.size != ROUNDED_ALPHABET_SIZE:
            raise RoundedRuleError("the rounded rule needs a 27-symbol alphabet")
        # the rule is fitted at the default typing speed
        fitted_years = rounded_rule_years(text.length, model)
        keystrokes = lq_mul(fitted_years, lq_from(TypingSpeed().chars_per_year))
        years = keystrokes_to_time(keystrokes, speed)
    else:
        if mode == EXACT_BORDER:
            if text.length == 0:
                keystrokes = LogQuantity.one()
            else:
                keystrokes = exact_expected_wait(text, model)
        else:
            keystrokes = _full_precision_keystrokes(text, model)
        years = keystrokes_to_time(keystrokes, speed)

    return WaitingEstimate(
        keystrokes=keystrokes,
        years=years,
        mode=mode,
        display=format_duration(years, speed.days_per_year),
        length=text.length,
        model=model.label(),
    )


def _one_decimal(value: float) -> str:
    return f"{value:.1f}"


def format_duration(years: LogQuantity, days_per_year: float = 365.0) -> str:
    """
    Human-readable duration in the largest unit with a leading value >= 1,
    annotated when it passes the age of the universe or the black-hole
    evaporation era.
    """
    if years.is_zero:
        return "0 seconds"

    log_years = years.log10
    if log_years < 0:
        seconds = years.to_float() * days_per_year * 86400.0
        if seconds < 60:
            return f"{_one_decimal(seconds)} seconds"
        if seconds < 3600:
            return f"{_one_decimal(seconds / 60)} minutes"
        if seconds < 86400:
            hours, minutes = divmod(round(seconds / 60), 60)
            if hours == 24:
                return f"{_one_decimal(seconds / 86400)} days"
            hour_word = "hour" if hours == 1 else "hours"
            minute_word = "minute" if minutes == 1 else "minutes"
            return f"{hours} {hour_word} and {minutes} {minute_word}"
        days = seconds / 86400
        if round(days, 1) < days_per_year:
            return f"{_one_decimal(days)} days"

    if log_years < 3:
        text = f"{_one_decimal(years.to_float())} years"
    elif log_years < 9:
        text = f"{round(years.to_float()):,} years"
    else:
        text = f"{lq_format(years, 2)} years"

    if log_years > BLACK_HOLE_ERA_LOG10_YEARS:
        text += " (exceeds black-hole evaporation era)"
    elif log_years > math.log10(AGE_OF_UNIVERSE_YEARS):
        text += " (exceeds age of universe)"
    return text


def mode_consistency_bound(length: int) -> float:
    """log10 of the largest factor between rounded and full-precision years."""
    return 0.01 * length + 0.01
