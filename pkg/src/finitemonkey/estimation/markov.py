"""
Finite Markov sources: sampling, analytic entropy rate and the
equipartition (AEP) check.
"""

import math

import numpy as np

from finitemonkey.support.exceptions import ModelError, ReducibleChainError
from finitemonkey.support.models import AEPStatistics, Alphabet, MonkeyModel

ROW_SUM_TOLERANCE = 1e-12


class MarkovSource:
    """
    A stationary-started Markov chain over the symbols of an alphabet.

    Args:
        alphabet: State space; state i emits ``alphabet.symbols[i]``.
        transitions: Row-stochastic matrix, ``transitions[i, j] = P(j | i)``.
        initial: Initial distribution; defaults to the stationary one.
    """

    def __init__(self, alphabet: Alphabet, transitions, initial=None):
        p = np.asarray(transitions, dtype=float)
        n = alphabet.size
        if p.shape != (n, n):
            raise ModelError(f"transition matrix must be {n}x{n}, got {p.shape}")
        if (p < 0).any():
            raise ModelError("transition probabilities must be nonnegative")
        if np.abs(p.sum(axis=1) - 1.0).max() > ROW_SUM_TOLERANCE:
            raise ModelError("transition matrix rows must sum to 1")
        if not is_irreducible(p):
            raise ReducibleChainError("Markov source must be irreducible")

        self.alphabet = alphabet
        self.transitions = p
        if (p == p[0]).all():
            self.stationary = p[0].copy()
        else:
            self.stationary = stationary_distribution(p)
        if initial is None:
            self.initial = self.stationary
        else:
            self.initial = np.asarray(initial, dtype=float)
            if self.initial.shape != (n,) or abs(self.initial.sum() - 1.0) > 1e-9:
                raise ModelError("initial distribution must be a probability vector")
        self._cumulative = np.cumsum(p, axis=1)
        self._cumulative[:, -1] = 1.0

    @classmethod
    def iid(cls, probabilities, alphabet: Alphabet | None = None) -> "MarkovSource":
        """Rank-1 chain: every row equals the symbol distribution."""
        probs = np.asarray(probabilities, dtype=float)
        alphabet = alphabet or Alphabet.of_size(len(probs))
        return cls(alphabet, np.tile(probs, (len(probs), 1)))

    @classmethod
    def uniform(cls, m: int) -> "MarkovSource":
        return cls.iid(np.full(m, 1.0 / m))

    @classmethod
    def symmetric_switch(cls, switch: float) -> "MarkovSource":
        """Two-state chain that changes symbol with probability ``switch``."""
        return cls(
            Alphabet.of_size(2), [[1.0 - switch, switch], [switch, 1.0 - switch]]
        )

    @classmethod
    def from_model(cls, model: MonkeyModel) -> "MarkovSource":
        return cls.iid(model.symbol_probabilities(), model.alphabet())

    @property
    def is_iid(self) -> bool:
        return bool((self.transitions == self.transitions[0]).all())

    def label(self) -> str:
        if self.is_iid:
            probs = ",".join(f"{p:g}" for p in self.transitions[0])
            return f"iid({probs})"
        return f"markov(m={self.alphabet.size})"

    def sample(self, length: int, rng: np.random.Generator, start=None) -> np.ndarray:
        """
        Draw ``length`` symbol codes. ``start`` is the previous state when
        continuing a stream; otherwise the first symbol comes from ``initial``.
        """
        if length <= 0:
            return np.zeros(0, dtype=np.int64)
        if self.is_iid:
            return rng.choice(self.alphabet.size, size=length, p=self.transitions[0])

        u = rng.random(length)
        out = np.empty(length, dtype=np.int64)
        cumulative = self._cumulative
        if start is None:
            state = int(np.searchsorted(np.cumsum(self.initial), u[0], side="right"))
            state = min(state, self.alphabet.size - 1)
            out[0] = state
            first = 1
        else:
            state = int(start)
            first = 0
        rows = [row.tolist() for row in cumulative]
        for i in range(first, length):
            row = rows[state]
            x = u[i]
            state = 0
            while row[state] <= x:
                state += 1
            out[i] = state
        return out

    def sample_batch(
        self, trials: int, length: int, rng: np.random.Generator
    ) -> np.ndarray:
        """Draw ``trials`` independent sequences at once, stepping across rows."""
        if self.is_iid:
            return rng.choice(
                self.alphabet.size, size=(trials, length), p=self.transitions[0]
            )
        out = np.empty((trials, length), dtype=np.int64)
        u = rng.random((trials, length))
        out[:, 0] = np.searchsorted(np.cumsum(self.initial), u[:, 0], side="right")
        np.minimum(out[:, 0], self.alphabet.size - 1, out=out[:, 0])
        for t in range(1, length):
            rows = self._cumulative[out[:, t - 1]]
            out[:, t] = (rows <= u[:, t : t + 1]).sum(axis=1)
        return out

    def log2_probability(self, codes: np.ndarray) -> np.ndarray:
        """log2 P(sequence) for one sequence or each row of a batch."""
        codes = np.atleast_2d(codes)
        with np.errstate(divide="ignore"):
            log_initial = np.log2(self.initial)
            log_p = np.log2(self.transitions)
        total = log_initial[codes[:, 0]]
        if codes.shape[1] > 1:
            total = total + log_p[codes[:, :-1], codes[:, 1:]].sum(axis=1)
        return total


def is_irreducible(transitions: np.ndarray) -> bool:
    """Every state reaches every other state along positive transitions."""
    n = transitions.shape[0]
    adjacency = transitions > 0
    for origin in range(n):
        seen = {origin}
        frontier = [origin]
        while frontier:
            state = frontier.pop()
            for nxt in np.flatnonzero(adjacency[state]).tolist():
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != n:
            return False
    return True


def stationary_distribution(transitions: np.ndarray) -> np.ndarray:
    """Solve πP = π with Σπ = 1 by least squares."""
    n = transitions.shape[0]
    a = np.vstack((transitions.T - np.eye(n), np.ones((1, n))))
    b = np.zeros(n + 1)
    b[-1] = 1.0
    pi, *_ = np.linalg.lstsq(a, b, rcond=None)
    pi = np.clip(pi, 0.0, None)
    return pi / pi.sum()


def markov_entropy_rate(source: MarkovSource) -> float:
    """-Σ_i π_i Σ_j P_ij log2 P_ij in bits per character."""
    p = source.transitions
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(p > 0, p * np.log2(p), 0.0)
    return float(-(source.stationary * terms.sum(axis=1)).sum())


def aep_deviation(
    source: MarkovSource, length: int, trials: int, seed: int = 0
) -> AEPStatistics:
    """
    Sample ``trials`` sequences of ``length`` symbols and summarize the
    per-character log-loss -(1/ℓ) log2 P(X_1 … X_ℓ).
    """
    if length < 1 or trials < 1:
        raise ModelError("aep_deviation needs length >= 1 and trials >= 1")
    rng = np.random.default_rng(seed)
    losses = np.empty(trials)
    # bounded memory per batch
    batch = max(1, min(trials, 2_000_000 // length))
    for start in range(0, trials, batch):
        count = min(batch, trials - start)
        codes = source.sample_batch(count, length, rng)
        losses[start : start + count] = -source.log2_probability(codes) / length
    std = float(losses.std(ddof=1)) if trials > 1 else 0.0
    return AEPStatistics(
        length=length,
        trials=trials,
        mean=float(losses.mean()),
        std=std,
        entropy_rate=markov_entropy_rate(source),
    )


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log2(p) + (1 - p) * math.log2(1 - p))
