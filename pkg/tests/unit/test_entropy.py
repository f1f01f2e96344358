"""
Unit tests for entropy module.
"""

import numpy as np
import pytest

from finitemonkey.estimation.entropy import (
    MATCHLEN,
    NGRAM,
    block_counts,
    encode,
    estimate_entropy,
    match_length_entropy,
    match_lengths,
    ngram_conditional_entropy,
    ngram_stats,
    plug_in_entropy,
)
from finitemonkey.estimation.markov import MarkovSource, binary_entropy
from finitemonkey.support.exceptions import TextTooShortError, UsageError
from finitemonkey.support.models import Alphabet, NGramStats, NormalizedText

BINARY = Alphabet.of_size(2)


def binary_text(codes) -> NormalizedText:
    return NormalizedText("".join("ab"[c] for c in codes), BINARY)


def brute_force_match_lengths(codes: list[int], window: int) -> list[int]:
    n = len(codes)
    result = []
    for i in range(n):
        best = 0
        for j in range(max(0, i - window), i):
            length = 0
            while (
                length < window
                and i + length < n
                and codes[i + length] == codes[j + length]
            ):
                length += 1
            best = max(best, length)
        result.append(best)
    return result


def test_plug_in_entropy():
    assert plug_in_entropy([1, 1]) == pytest.approx(1.0)
    assert plug_in_entropy([5]) == 0.0
    assert plug_in_entropy([1, 1, 1, 1, 0]) == pytest.approx(2.0)
    assert plug_in_entropy([]) == 0.0


def test_ngram_stats():
    stats = ngram_stats(NormalizedText("abab", BINARY), 2)
    assert stats == NGramStats(order=2, counts={"ab": 2, "ba": 1}, total=3)
    assert plug_in_entropy(stats) == pytest.approx(0.9182958, abs=1e-6)


def test_ngram_stats_too_short():
    with pytest.raises(TextTooShortError):
        ngram_stats(NormalizedText("ab", BINARY), 3)


def test_block_counts_match_ngram_stats():
    text = NormalizedText("the die is cast and the die is cast")
    stats = ngram_stats(text, 3)
    _, counts = block_counts(encode(text), 3, 27)
    assert sorted(counts.tolist()) == sorted(stats.counts.values())


def test_block_counts_long_blocks_use_ranks():
    """Blocks too long for packed int64 keys are counted by rank refinement."""
    rng = np.random.default_rng(5)
    codes = rng.integers(0, 27, size=400)
    codes = np.concatenate([codes, codes])
    _, counts = block_counts(codes, 20, 27)
    assert counts.sum() == len(codes) - 20 + 1
    assert counts.max() == 2


def test_block_counts_independent_of_workers():
    rng = np.random.default_rng(9)
    codes = rng.integers(0, 4, size=5000)
    keys_1, counts_1 = block_counts(codes, 3, 4, workers=1)
    keys_2, counts_2 = block_counts(codes, 3, 4, workers=2)
    assert keys_1.tolist() == keys_2.tolist()
    assert counts_1.tolist() == counts_2.tolist()


def test_ngram_uniform_binary_is_one_bit():
    rng = np.random.default_rng(1)
    text = binary_text(rng.integers(0, 2, size=200_000))
    result = ngram_conditional_entropy(text, 1)
    assert result.value == pytest.approx(1.0, abs=0.01)
    assert result.method == NGRAM
    assert result.sample_size == 200_000


def test_ngram_periodic_text_is_zero():
    result = ngram_conditional_entropy(binary_text([0, 1] * 500), 2)
    assert result.value == pytest.approx(0.0, abs=1e-3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ngram_iid_source(n):
    source = MarkovSource.iid([0.25, 0.75])
    codes = source.sample(200_000, np.random.default_rng(2))
    result = ngram_conditional_entropy(binary_text(codes), n)
    assert result.value == pytest.approx(binary_entropy(0.25), abs=0.05)


def test_ngram_markov_source():
    source = MarkovSource.symmetric_switch(0.1)
    codes = source.sample(200_000, np.random.default_rng(4))
    result = ngram_conditional_entropy(binary_text(codes), 3)
    assert result.value == pytest.approx(binary_entropy(0.1), abs=0.02)


@pytest.mark.parametrize(
    "source",
    [MarkovSource.symmetric_switch(0.1), MarkovSource.iid([0.25, 0.75])],
    ids=["markov", "iid"],
)
def test_ngram_estimates_do_not_increase_with_order(source):
    text = binary_text(source.sample(200_000, np.random.default_rng(5)))
    values = [ngram_conditional_entropy(text, n).value for n in range(1, 7)]
    assert all(b <= a + 1e-3 for a, b in zip(values, values[1:])), values


def test_ngram_bad_order():
    with pytest.raises(UsageError):
        ngram_conditional_entropy(NormalizedText("abab", BINARY), 0)
    with pytest.raises(TextTooShortError):
        ngram_conditional_entropy(NormalizedText("ab", BINARY), 3)


def test_match_lengths_small_example():
    codes = np.array([0, 1, 0, 1])
    assert match_lengths(codes, 2, 2).tolist() == [0, 0, 2, 1]


def test_match_lengths_agree_with_brute_force():
    rng = np.random.default_rng(6)
    for _ in range(200):
        m = int(rng.integers(2, 4))
        window = int(rng.integers(1, 8))
        codes = rng.integers(0, m, size=int(rng.integers(1, 60)))
        expected = brute_force_match_lengths(codes.tolist(), window)
        assert match_lengths(codes, window, m).tolist() == expected


def test_match_length_cap():
    codes = np.zeros(50, dtype=np.int64)
    lengths = match_lengths(codes, 4, 2)
    assert lengths.max() == 4
    assert lengths[0] == 0


def test_match_length_entropy_uniform_binary():
    rng = np.random.default_rng(8)
    window = 2**12
    text = binary_text(rng.integers(0, 2, size=4 * window))
    result = match_length_entropy(text, window)
    assert result.method == MATCHLEN
    assert result.parameter == window
    assert result.value == pytest.approx(1.0, abs=0.15)


def test_match_length_entropy_preconditions():
    with pytest.raises(UsageError):
        match_length_entropy(NormalizedText("abab", BINARY), 1)
    with pytest.raises(TextTooShortError):
        match_length_entropy(NormalizedText("abab", BINARY), 4)


def test_estimate_entropy_dispatch():
    text = binary_text([0, 1] * 100)
    assert estimate_entropy(text, NGRAM, 1).value == pytest.approx(1.0)
    assert estimate_entropy(text, MATCHLEN, 8).method == MATCHLEN
    with pytest.raises(UsageError):
        estimate_entropy(text, "lz78", 3)


@pytest.mark.slow
def test_estimators_converge_on_markov_source():
    """10^6 characters from a two-state source with known entropy rate."""
    source = MarkovSource.symmetric_switch(0.1)
    codes = source.sample(1_000_000, np.random.default_rng(12))
    text = binary_text(codes)
    h = binary_entropy(0.1)
    for n in (2, 3):
        assert ngram_conditional_entropy(text, n).value == pytest.approx(h, abs=0.05)
    assert match_length_entropy(text, 2**16).value == pytest.approx(h, abs=0.1)


@pytest.mark.slow
def test_match_length_entropy_uniform_binary_at_scale():
    """10^6 fair coin flips with a 2^16 window."""
    rng = np.random.default_rng(13)
    text = binary_text(rng.integers(0, 2, size=1_000_000))
    result = match_length_entropy(text, 2**16)
    assert result.value == pytest.approx(1.0, abs=0.1)
    assert result.sample_size == 1_000_000
