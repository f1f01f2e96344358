"""
Unit tests for the simulation farm.
"""

import itertools
import json
import math

import numpy as np
import pytest

from finitemonkey.core.matcher import PatternMatcher, borders
from finitemonkey.core.waiting import exact_expected_wait
from finitemonkey.estimation.markov import MarkovSource
from finitemonkey.simulation.farm import (
    MAX_CHUNK,
    MIN_CHUNK,
    SymbolStream,
    expected_log2_wait,
    initial_chunk,
    philox_key,
    simulate_waiting,
    summarize,
    throughput_benchmark,
    trial_generator,
    waiting_times,
)
from finitemonkey.support.exceptions import (
    ModelError,
    PatternAlphabetError,
    UsageError,
)
from finitemonkey.support.models import (
    Alphabet,
    MonkeyModel,
    NormalizedText,
    ThroughputReport,
)


def within(summary, expected, sigmas: float = 3.0) -> bool:
    return abs(summary.mean - expected) <= sigmas * summary.stderr


def test_trial_generators_are_reproducible_and_distinct():
    a = trial_generator(1, 0).integers(0, 1000, size=8).tolist()
    b = trial_generator(1, 0).integers(0, 1000, size=8).tolist()
    c = trial_generator(1, 1).integers(0, 1000, size=8).tolist()
    assert a == b
    assert a != c


def test_shared_key_matches_per_trial_hashing():
    key = philox_key(11)
    for trial in (0, 1, 1_000_003):
        a = trial_generator(11, trial, key).integers(0, 1 << 30, size=4)
        b = trial_generator(11, trial).integers(0, 1 << 30, size=4)
        assert a.tolist() == b.tolist()


@pytest.mark.parametrize(
    "pattern, m, expected",
    [("abc", 27, 27**3), ("aa", 2, 6), ("abab", 2, 20), ("a", 2, 2)],
)
def test_expected_log2_wait_is_border_sum(pattern, m, expected):
    model = MonkeyModel.uniform(m)
    stream = SymbolStream(model)
    matcher = PatternMatcher(pattern, model.alphabet())
    assert expected_log2_wait(stream, matcher) == pytest.approx(math.log2(expected))


def test_expected_log2_wait_uses_stationary_distribution():
    source = MarkovSource.symmetric_switch(0.25)
    stream = SymbolStream(source)
    matcher = PatternMatcher("aa", source.alphabet)
    assert expected_log2_wait(stream, matcher) == pytest.approx(math.log2(6))


def test_initial_chunk_is_a_quarter_of_the_expected_wait():
    assert initial_chunk(math.log2(27**3)) == 8192
    assert initial_chunk(20.0) == 1 << 18


@pytest.mark.parametrize("log2_expected", [0.0, 1.0, 7.9, -3.0])
def test_initial_chunk_floor(log2_expected):
    assert initial_chunk(log2_expected) == MIN_CHUNK


@pytest.mark.parametrize("log2_expected", [22.0, 60.0, 5_000.0])
def test_initial_chunk_ceiling(log2_expected):
    assert initial_chunk(log2_expected) == MAX_CHUNK


@pytest.mark.parametrize(
    "pattern, m, expected",
    [("aa", 2, 6), ("abab", 2, 20), ("ab", 2, 4)],
)
def test_simulation_agrees_with_exact_wait(pattern, m, expected):
    summary = simulate_waiting(MonkeyModel.uniform(m), pattern, 20_000, seed=1)
    assert within(summary, expected)
    assert summary.trials == 20_000
    assert summary.min >= len(pattern)
    assert summary.min <= summary.mean <= summary.max


def test_borderless_pattern_over_27_symbols():
    summary = simulate_waiting(MonkeyModel.uniform(27), "abc", 1_000, seed=2)
    assert within(summary, 27**3)


def test_nonuniform_iid_source():
    model = MonkeyModel.iid([0.25, 0.75])
    summary = simulate_waiting(model, "aa", 20_000, seed=3)
    assert within(summary, 20)


def test_markov_source_continues_across_chunks():
    """Symmetric switch s: the pattern "ab" ends after 1 + 1.5/s symbols on average."""
    source = MarkovSource.symmetric_switch(0.25)
    summary = simulate_waiting(source, "ab", 20_000, seed=4)
    assert within(summary, 1 + 1.5 / 0.25, sigmas=4)
    assert summary.source == "markov(m=2)"


def test_deterministic_across_runs_and_workers():
    model = MonkeyModel.uniform(2)
    one = simulate_waiting(model, "abab", 400, seed=5, workers=1)
    again = simulate_waiting(model, "abab", 400, seed=5, workers=1)
    spread = simulate_waiting(model, "abab", 400, seed=5, workers=3)
    assert one.to_record() == again.to_record() == spread.to_record()


def test_waiting_times_ordered_by_trial():
    model = MonkeyModel.uniform(3)
    whole = waiting_times(model, "abc", 50, seed=6)
    parallel = waiting_times(model, "abc", 50, seed=6, workers=2)
    assert whole.tolist() == parallel.tolist()


def test_normalized_text_pattern():
    pattern = NormalizedText("ab", Alphabet.of_size(2))
    summary = simulate_waiting(MonkeyModel.uniform(2), pattern, 10, seed=0)
    assert summary.pattern == "ab"


def test_record_is_single_line_json():
    summary = simulate_waiting(MonkeyModel.uniform(2), "aa", 10, seed=9)
    record = summary.to_record()
    assert "\n" not in record
    assert json.loads(record)["seed"] == 9


def test_zero_trials_is_usage_error():
    with pytest.raises(UsageError):
        simulate_waiting(MonkeyModel.uniform(2), "aa", 0, seed=0)


def test_pattern_outside_source_alphabet():
    with pytest.raises(PatternAlphabetError):
        simulate_waiting(MonkeyModel.uniform(2), "abc", 10, seed=0)


def test_educated_monkey_cannot_be_simulated():
    with pytest.raises(UsageError):
        SymbolStream(MonkeyModel.educated())


def test_summarize_single_trial():
    summary = summarize(np.array([7]), seed=0)
    assert summary.stderr == 0.0
    assert summary.mean == summary.min == summary.max == 7


def test_benchmark_zero_duration():
    report = throughput_benchmark(MonkeyModel.uniform(27), 0)
    assert report == ThroughputReport(symbols=0, seconds=0.0)
    assert report.rate == 0.0


def test_benchmark_short_run():
    report = throughput_benchmark(MonkeyModel.uniform(27), 0.05)
    assert report.symbols > 0
    assert report.seconds >= 0.05
    assert report.rate > 0


def test_benchmark_with_time_mocked(mocker):
    clock = mocker.patch("finitemonkey.simulation.farm.time.perf_counter")
    clock.side_effect = [0.0, 0.5, 1.0]
    report = throughput_benchmark(MonkeyModel.uniform(2), 1.0)
    assert report.symbols == 2 * (1 << 16)
    assert report.seconds == 1.0


def test_single_symbol_alphabet_rejected():
    with pytest.raises(ModelError):
        throughput_benchmark(MonkeyModel.uniform(1), 1.0)


def zscore(summary, expected) -> float:
    return abs(summary.mean - expected) / summary.stderr


def assert_sweep_within_three_sigma(scores: dict[str, float], allowed: int):
    """
    Each pattern is held to 3 standard errors. A sweep of n independent
    patterns is expected to see about 0.0027 n of them past that by chance,
    so up to ``allowed`` may, and none may pass 4.
    """
    outside = {pattern: z for pattern, z in scores.items() if z > 3}
    assert len(outside) <= allowed, outside
    assert max(scores.values()) <= 4, outside


@pytest.mark.slow
def test_exhaustive_small_patterns_match_exact_wait():
    """Every pattern of length <= 4 over three symbols at 10^5 trials."""
    model = MonkeyModel.uniform(3)
    alphabet = model.alphabet()
    scores = {}
    for length in range(1, 5):
        for letters in itertools.product("abc", repeat=length):
            pattern = "".join(letters)
            exact = exact_expected_wait(NormalizedText(pattern, alphabet), model)
            summary = simulate_waiting(model, pattern, 100_000, seed=length)
            scores[pattern] = zscore(summary, exact.to_float())
    assert len(scores) == 120
    assert_sweep_within_three_sigma(scores, allowed=2)


@pytest.mark.slow
def test_borderless_patterns_match_simulation():
    rng = np.random.default_rng(21)
    model = MonkeyModel.uniform(27)
    symbols = model.alphabet().symbols
    scores = {}
    while len(scores) < 100:
        pattern = "".join(symbols[i] for i in rng.integers(0, 27, size=3))
        if borders(pattern) != {3} or pattern in scores:
            continue
        summary = simulate_waiting(model, pattern, 10_000, seed=len(scores))
        scores[pattern] = zscore(summary, 27**3)
    assert_sweep_within_three_sigma(scores, allowed=2)
