"""
Data models for finitemonkey.
"""

import json
import math
from dataclasses import asdict, dataclass, field

from finitemonkey.core.logdomain import LogQuantity
from finitemonkey.support.exceptions import InputError, ModelError

CANONICAL_SYMBOLS = "abcdefghijklmnopqrstuvwxyz "

SECONDS_PER_HOUR = 3600.0


@dataclass(frozen=True)
class Alphabet:
    """Finite symbol set with a canonical symbol order."""

    symbols: str

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise ModelError("an alphabet needs at least 2 symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise ModelError(f"alphabet symbols must be distinct: {self.symbols!r}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @classmethod
    def canonical(cls) -> "Alphabet":
        """The 26 lower-case Latin letters plus space."""
        return cls(CANONICAL_SYMBOLS)

    @classmethod
    def of_size(cls, m: int) -> "Alphabet":
        """The first m symbols of the canonical order."""
        if not 2 <= m <= len(CANONICAL_SYMBOLS):
            raise ModelError(
                f"alphabet size must be between 2 and {len(CANONICAL_SYMBOLS)}, got {m}"
            )
        return cls(CANONICAL_SYMBOLS[:m])

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def encode(self, text: str) -> list[int]:
        """Map each character to its index in the symbol order."""
        lookup = {s: i for i, s in enumerate(self.symbols)}
        return [lookup[ch] for ch in text]


@dataclass(frozen=True)
class NormalizedText:
    """A string over an Alphabet; single spaces only, none at the ends."""

    content: str
    alphabet: Alphabet = field(default_factory=Alphabet.canonical)

    def __post_init__(self):
        stray = sorted({ch for ch in self.content if ch not in self.alphabet})
        if stray:
            raise InputError(f"text contains symbols outside the alphabet: {stray!r}")
        if self.content != self.content.strip(" ") or "  " in self.content:
            raise InputError("normalized text cannot have doubled or edge spaces")

    @property
    def length(self) -> int:
        return len(self.content)

    def __len__(self) -> int:
        return len(self.content)

    def __str__(self) -> str:
        return self.content


@dataclass(frozen=True)
class TypingSpeed:
    """Words/minute, chars/word and duty cycle of a typist."""

    words_per_minute: float = 52.0
    chars_per_word: float = 5.0
    hours_per_day: float = 24.0
    days_per_year: float = 365.0

    def __post_init__(self):
        fields = (
            "words_per_minute",
            "chars_per_word",
            "hours_per_day",
            "days_per_year",
        )
        for name in fields:
            if not getattr(self, name) > 0:
                raise ModelError(f"{name} must be positive")
        if self.hours_per_day > 24:
            raise ModelError("hours_per_day cannot exceed 24")

    @property
    def chars_per_second(self) -> float:
        return self.words_per_minute * self.chars_per_word / 60.0

    @property
    def chars_per_year(self) -> float:
        return (
            self.chars_per_second
            * SECONDS_PER_HOUR
            * self.hours_per_day
            * self.days_per_year
        )


@dataclass(frozen=True)
class MonkeyModel:
    """How the monkey picks keys."""

    kind: str  # "uniform", "educated", or "iid"
    alphabet_size: int | None = None
    entropy_rate: float | None = None  # bits per character
    probabilities: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.kind == "uniform":
            if self.alphabet_size is None or self.alphabet_size < 2:
                raise ModelError("a uniform monkey needs an alphabet of size m >= 2")
        elif self.kind == "educated":
            if self.entropy_rate is None or not self.entropy_rate > 0:
                raise ModelError("an educated monkey needs an entropy rate h > 0")
        elif self.kind == "iid":
            probs = self.probabilities
            if probs is None or len(probs) < 2:
                raise ModelError("an i.i.d. monkey needs at least 2 probabilities")
            if any(not p > 0 for p in probs):
                raise ModelError("all symbol probabilities must be positive")
            if abs(math.fsum(probs) - 1.0) > 1e-12:
                raise ModelError("symbol probabilities must sum to 1")
        else:
            raise ModelError(f"unknown monkey kind: {self.kind!r}")

    @classmethod
    def uniform(cls, m: int = 27) -> "MonkeyModel":
        return cls("uniform", alphabet_size=m)

    @classmethod
    def educated(cls, h: float = 0.863) -> "MonkeyModel":
        return cls("educated", entropy_rate=h)

    @classmethod
    def iid(cls, probabilities) -> "MonkeyModel":
        return cls("iid", probabilities=tuple(float(p) for p in probabilities))

    @property
    def is_iid(self) -> bool:
        return self.kind in ("uniform", "iid")

    @property
    def size(self) -> int | None:
        """Alphabet size for i.i.d. models, None for the educated monkey."""
        if self.kind == "uniform":
            return self.alphabet_size
        if self.kind == "iid":
            return len(self.probabilities)
        return None

    def alphabet(self) -> Alphabet:
        if not self.is_iid:
            raise ModelError("the educated monkey has no explicit alphabet")
        return Alphabet.of_size(self.size)

    def symbol_probabilities(self) -> tuple[float, ...]:
        if self.kind == "uniform":
            return tuple([1.0 / self.alphabet_size] * self.alphabet_size)
        if self.kind == "iid":
            return self.probabilities
        raise ModelError("the educated monkey has no symbol distribution")

    def label(self) -> str:
        if self.kind == "uniform":
            return f"uniform(m={self.alphabet_size})"
        if self.kind == "educated":
            return f"educated(h={self.entropy_rate:g})"
        return f"iid({','.join(f'{p:g}' for p in self.probabilities)})"


@dataclass(frozen=True)
class WaitingEstimate:
    """Keystrokes and calendar time for one (text, monkey) pair."""

    keystrokes: LogQuantity
    years: LogQuantity
    mode: str  # "rounded_rule", "full_precision", or "exact_border"
    display: str
    length: int = 0
    model: str = ""


@dataclass
class NGramStats:
    """Sliding-window block counts of one order."""

    order: int
    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class EntropyEstimate:
    """An entropy-rate estimate in bits per character."""

    value: float
    method: str  # "ngram" or "matchlen"
    parameter: int
    sample_size: int
    alphabet_size: int


@dataclass(frozen=True)
class PresetEstimate:
    """One published estimate of the entropy rate of English."""

    key: str
    method: str
    low: float
    high: float
    units: str = "bits/char"
    note: str = ""
    is_default: bool = False

    @property
    def value(self) -> float:
        """Point estimate; the midpoint for ranged rows."""
        return (self.low + self.high) / 2.0

    @property
    def is_range(self) -> bool:
        return self.low != self.high


@dataclass(frozen=True)
class TrialSummary:
    """Aggregate of independent first-occurrence trials."""

    trials: int
    mean: float
    stderr: float
    min: int
    max: int
    seed: int
    pattern: str = ""
    source: str = ""

    def to_record(self) -> str:
        """Single-line JSON record with stable key order."""
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class ThroughputReport:
    """Symbols generated and matched within a time budget."""

    symbols: int
    seconds: float

    @property
    def rate(self) -> float:
        if self.seconds <= 0 or self.symbols == 0:
            return 0.0
        return self.symbols / self.seconds


@dataclass(frozen=True)
class AEPStatistics:
    """Sample statistics of the per-character log-loss."""

    length: int
    trials: int
    mean: float
    std: float
    entropy_rate: float
