"""
Entropy-rate estimation from text.

Two estimators are provided:

- ``ngram``: the plug-in conditional entropy H_n - H_{n-1} from sliding
  (overlapping) block frequencies, with 0·log 0 = 0.
- ``matchlen``: the fixed-window match-length estimator log2(W) / mean(Λ),
  where Λ_i is one plus the longest match starting at i that also starts
  within the previous W positions (match length capped at W).
"""

import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from finitemonkey.support.exceptions import TextTooShortError, UsageError
from finitemonkey.support.models import EntropyEstimate, NGramStats, NormalizedText

NGRAM = "ngram"
MATCHLEN = "matchlen"
METHODS = (NGRAM, MATCHLEN)

# m**n must fit in int64 for the packed block keys
_MAX_PACKED_LOG2 = 62


def encode(text: NormalizedText) -> np.ndarray:
    """Symbol codes of a normalized text as an int64 array."""
    return np.asarray(text.alphabet.encode(text.content), dtype=np.int64)


def _packed_keys(codes: np.ndarray, n: int, m: int) -> np.ndarray:
    """One integer per length-n sliding window: Σ codes[i+t] m^(n-1-t)."""
    count = len(codes) - n + 1
    keys = np.zeros(count, dtype=np.int64)
    for t in range(n):
        keys = keys * m + codes[t : t + count]
    return keys


def _count_blocks(codes: np.ndarray, n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    if len(codes) < n:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    if n * math.log2(m) <= _MAX_PACKED_LOG2:
        return np.unique(_packed_keys(codes, n, m), return_counts=True)
    # very long blocks: rank refinement keeps keys small
    ranks = codes.copy()
    for t in range(1, n):
        count = len(codes) - t
        _, ranks = np.unique(ranks[:count] * m + codes[t:], return_inverse=True)
    return np.unique(ranks, return_counts=True)


def _count_chunk(args) -> tuple[np.ndarray, np.ndarray]:
    codes, n, m = args
    return _count_blocks(codes, n, m)


def block_counts(
    codes: np.ndarray, n: int, m: int, workers: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """
    Counts of every distinct length-n block. With several workers the
    window positions are split into ranges and the counts merged, which
    gives the same totals for any worker count.
    """
    positions = len(codes) - n + 1
    if workers <= 1 or positions < 2 * workers or n * math.log2(m) > _MAX_PACKED_LOG2:
        return _count_blocks(codes, n, m)

    bounds = np.linspace(0, positions, workers + 1).astype(int)
    jobs = [
        (codes[start : end + n - 1], n, m)
        for start, end in zip(bounds[:-1], bounds[1:])
        if end > start
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_count_chunk, jobs))
    keys = np.concatenate([k for k, _ in parts])
    counts = np.concatenate([c for _, c in parts])
    merged, inverse = np.unique(keys, return_inverse=True)
    return merged, np.bincount(inverse, weights=counts).astype(np.int64)


def ngram_stats(text: NormalizedText, n: int) -> NGramStats:
    """Sliding-window counts of length-n blocks, keyed by the blocks themselves."""
    if n < 1:
        raise UsageError("n-gram order must be at least 1")
    if text.length < n:
        raise TextTooShortError(text.length, n, f"{n}-gram statistics")
    counts: dict[str, int] = {}
    content = text.content
    for i in range(text.length - n + 1):
        block = content[i : i + n]
        counts[block] = counts.get(block, 0) + 1
    return NGramStats(order=n, counts=counts, total=text.length - n + 1)


def plug_in_entropy(counts) -> float:
    """Plug-in Shannon entropy in bits of a count vector or NGramStats."""
    if isinstance(counts, NGramStats):
        counts = list(counts.counts.values())
    counts = np.asarray(counts, dtype=float)
    counts = counts[counts > 0]
    if counts.size == 0:
        return 0.0
    p = counts / counts.sum()
    return float(-(p * np.log2(p)).sum())


def ngram_conditional_entropy(
    text: NormalizedText, n: int, workers: int = 1
) -> EntropyEstimate:
    """H_n - H_{n-1} in bits per character (H_0 = 0)."""
    if n < 1:
        raise UsageError("n-gram order must be at least 1")
    if text.length < n:
        raise TextTooShortError(text.length, n, f"the order-{n} n-gram estimator")

    m = text.alphabet.size
    codes = encode(text)
    h_n = plug_in_entropy(block_counts(codes, n, m, workers)[1])
    h_prev = 0.0
    if n > 1:
        h_prev = plug_in_entropy(block_counts(codes, n - 1, m, workers)[1])
    value = min(max(h_n - h_prev, 0.0), math.log2(m))
    return EntropyEstimate(
        value=value,
        method=NGRAM,
        parameter=n,
        sample_size=text.length,
        alphabet_size=m,
    )


def match_lengths(codes: np.ndarray, window: int, m: int) -> np.ndarray:
    """
    For every position i, the longest L <= window such that
    codes[i:i+L] == codes[j:j+L] for some j in [i - window, i).

    Works one block length k at a time: positions are grouped by their
    length-k block (exact ranks, no hashing), and the nearest earlier
    member of the same group decides whether a match of length k exists.
    Positions with no equal block within ``window`` on either side can
    never match longer blocks and are dropped.
    """
    n = len(codes)
    lengths = np.zeros(n, dtype=np.int64)
    positions = np.arange(n, dtype=np.int64)
    ranks = codes.astype(np.int64)
    k = 1
    while positions.size > 1 and k <= window:
        order = np.argsort(ranks, kind="stable")
        ranks = ranks[order]
        positions = positions[order]

        same = ranks[1:] == ranks[:-1]
        close = (positions[1:] - positions[:-1]) <= window
        linked = same & close
        has_prev = np.concatenate(([False], linked))
        has_next = np.concatenate((linked, [False]))

        lengths[positions[has_prev]] = k

        alive = (has_prev | has_next) & (positions + k < n)
        positions = positions[alive]
        if positions.size == 0:
            break
        extended = ranks[alive] * m + codes[positions + k]
        _, ranks = np.unique(extended, return_inverse=True)
        ranks = ranks.astype(np.int64).ravel()
        k += 1
    return lengths


def match_length_entropy(text: NormalizedText, window: int) -> EntropyEstimate:
    """log2(W) / mean(Λ_i) over positions i >= W, in bits per character."""
    if window < 2:
        raise UsageError("match-length window must be at least 2")
    if text.length < 2 * window:
        raise TextTooShortError(
            text.length, 2 * window, f"the match-length estimator with W={window}"
        )
    m = text.alphabet.size
    lengths = match_lengths(encode(text), window, m)
    mean_lambda = float((lengths[window:] + 1).mean())
    value = min(max(math.log2(window) / mean_lambda, 0.0), math.log2(m))
    return EntropyEstimate(
        value=value,
        method=MATCHLEN,
        parameter=window,
        sample_size=text.length,
        alphabet_size=m,
    )


def estimate_entropy(
    text: NormalizedText, method: str, parameter: int, workers: int = 1
) -> EntropyEstimate:
    """Dispatch to the named estimator."""
    if method == NGRAM:
        return ngram_conditional_entropy(text, parameter, workers)
    if method == MATCHLEN:
        return match_length_entropy(text, parameter)
    raise UsageError(f"unknown estimation method {method!r}; expected one of {METHODS}")
