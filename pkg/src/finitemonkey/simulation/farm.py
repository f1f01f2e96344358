"""
Monte Carlo monkey farm: stream symbols from a source until a target
pattern first appears, over many independent, reproducible trials.

Trial t draws from its own block of one counter-based Philox stream: the
key comes from ``SeedSequence(seed)`` and the counter starts at ``t << 192``.
Results depend only on (seed, trial index), never on how trials are spread
across workers.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from finitemonkey.core.matcher import PatternMatcher, borders
from finitemonkey.estimation.markov import MarkovSource
from finitemonkey.support.exceptions import UsageError
from finitemonkey.support.models import (
    MonkeyModel,
    NormalizedText,
    ThroughputReport,
    TrialSummary,
)

MIN_CHUNK = 64
MAX_CHUNK = 1 << 20
BENCHMARK_CHUNK = 1 << 16


class SymbolStream:
    """Chunked symbol generator over a MonkeyModel or MarkovSource."""

    def __init__(self, source):
        if isinstance(source, MonkeyModel):
            if not source.is_iid:
                raise UsageError(
                    "the educated monkey has no explicit distribution to simulate"
                )
            self.alphabet = source.alphabet()
            self._uniform = source.kind == "uniform"
            self._probs = np.asarray(source.symbol_probabilities())
            self._markov = None
            self.label = source.label()
        elif isinstance(source, MarkovSource):
            self.alphabet = source.alphabet
            self._uniform = False
            self._probs = None
            self._markov = source
            self.label = source.label()
        else:
            raise UsageError(
                f"cannot simulate a source of type {type(source).__name__}"
            )
        self._last = None

    def reset(self):
        self._last = None

    def draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        m = self.alphabet.size
        if self._uniform:
            return rng.integers(0, m, size=size, dtype=np.uint8)
        if self._markov is None:
            return rng.choice(m, size=size, p=self._probs)
        chunk = self._markov.sample(size, rng, start=self._last)
        self._last = int(chunk[-1])
        return chunk

    def symbol_probabilities(self) -> np.ndarray:
        """Marginal symbol distribution (stationary for Markov sources)."""
        if self._markov is not None:
            return np.asarray(self._markov.stationary, dtype=float)
        return self._probs


def philox_key(seed: int) -> np.ndarray:
    """128-bit Philox key shared by every trial of one seed."""
    return np.random.SeedSequence(seed).generate_state(2, dtype=np.uint64)


def trial_generator(
    seed: int, trial: int, key: np.ndarray | None = None
) -> np.random.Generator:
    """Independent generator for one trial; pass ``key`` to skip re-hashing."""
    if key is None:
        key = philox_key(seed)
    return np.random.Generator(np.random.Philox(counter=trial << 192, key=key))


def expected_log2_wait(stream: SymbolStream, matcher: PatternMatcher) -> float:
    """log2 of the border-sum waiting time under the marginal distribution."""
    log2_probs = np.log2(stream.symbol_probabilities())
    prefix = np.concatenate(([0.0], np.cumsum(-log2_probs[matcher.codes])))
    terms = [prefix[b] for b in borders(matcher.pattern)]
    return float(np.logaddexp2.reduce(terms))


def initial_chunk(log2_expected: float) -> int:
    """A quarter of the expected wait, as a power of two within fixed bounds."""
    log2_chunk = log2_expected - 2
    if log2_chunk >= math.log2(MAX_CHUNK):
        return MAX_CHUNK
    return max(MIN_CHUNK, 1 << max(0, math.ceil(log2_chunk)))


def _single_trial(
    stream: SymbolStream, matcher: PatternMatcher, rng: np.random.Generator, chunk: int
) -> int:
    stream.reset()
    matcher.reset()
    consumed = 0
    while True:
        codes = stream.draw(rng, chunk)
        hit = matcher.scan(codes)
        if hit > 0:
            return consumed + hit
        consumed += len(codes)
        chunk = min(chunk * 2, MAX_CHUNK)


def _run_trials(args) -> np.ndarray:
    source, pattern, seed, first, last = args
    stream = SymbolStream(source)
    matcher = PatternMatcher(pattern, stream.alphabet)
    chunk = initial_chunk(expected_log2_wait(stream, matcher))
    key = philox_key(seed)
    waits = np.empty(last - first, dtype=np.int64)
    for offset, trial in enumerate(range(first, last)):
        rng = trial_generator(seed, trial, key)
        waits[offset] = _single_trial(stream, matcher, rng, chunk)
    return waits


def waiting_times(
    source, pattern: str, trials: int, seed: int = 0, workers: int = 1
) -> np.ndarray:
    """Per-trial first-occurrence indices (1-based, last pattern symbol)."""
    if trials < 1:
        raise UsageError("trials must be at least 1")
    # validates pattern symbols against the source alphabet up front
    PatternMatcher(pattern, SymbolStream(source).alphabet)

    if workers <= 1 or trials < 2 * workers:
        return _run_trials((source, pattern, seed, 0, trials))

    bounds = np.linspace(0, trials, workers + 1).astype(int).tolist()
    jobs = [
        (source, pattern, seed, first, last)
        for first, last in zip(bounds[:-1], bounds[1:])
        if last > first
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_trials, jobs))
    return np.concatenate(parts)


def summarize(
    waits: np.ndarray, seed: int, pattern: str = "", source: str = ""
) -> TrialSummary:
    n = len(waits)
    stderr = float(waits.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return TrialSummary(
        trials=n,
        mean=float(waits.mean()),
        stderr=stderr,
        min=int(waits.min()),
        max=int(waits.max()),
        seed=seed,
        pattern=pattern,
        source=source,
    )


def simulate_waiting(
    source,
    pattern: NormalizedText | str,
    trials: int,
    seed: int = 0,
    workers: int = 1,
) -> TrialSummary:
    """
    Run ``trials`` independent monkeys until each first types ``pattern``.

    Args:
        source: An i.i.d. MonkeyModel or a MarkovSource.
        pattern: Target text over the source alphabet.
        trials: Number of independent trials (>= 1).
        seed: Base seed; trial t uses (seed, t).
        workers: Worker processes; results do not depend on this.
    """
    text = pattern.content if isinstance(pattern, NormalizedText) else pattern
    waits = waiting_times(source, text, trials, seed, workers)
    return summarize(waits, seed, text, SymbolStream(source).label)


def throughput_benchmark(
    source, duration: float, pattern: str | None = None, seed: int = 0
) -> ThroughputReport:
    """Generate-and-match rate over roughly ``duration`` seconds."""
    stream = SymbolStream(source)
    if duration <= 0:
        return ThroughputReport(symbols=0, seconds=0.0)

    # a long run of the last symbol: effectively never completes
    pattern = pattern or stream.alphabet.symbols[-1] * 24
    matcher = PatternMatcher(pattern, stream.alphabet)
    rng = trial_generator(seed, 0)
    symbols = 0
    start = time.perf_counter()
    elapsed = 0.0
    while elapsed < duration:
        codes = stream.draw(rng, BENCHMARK_CHUNK)
        if matcher.scan(codes) > 0:
            matcher.reset()
        symbols += len(codes)
        elapsed = time.perf_counter() - start
    return ThroughputReport(symbols=symbols, seconds=elapsed)
