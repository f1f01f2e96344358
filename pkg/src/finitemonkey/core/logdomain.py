"""
Arithmetic on astronomically large positive quantities stored as base-10
logarithms, plus exact big-integer evaluation for small cases.
"""

import math
from dataclasses import dataclass

from finitemonkey.support.exceptions import (
    InputError,
    LogDomainZeroDivisionError,
    NegativeQuantityError,
)

# Above this exponent the mantissa is dropped and only 10^E is shown.
MANTISSA_SUPPRESSION_EXPONENT = 1000

# Exact integers are only produced when they have at most this many digits.
EXACT_DIGIT_LIMIT = 10_000

_LN10 = math.log(10.0)


@dataclass(frozen=True)
class LogQuantity:
    """
    A nonnegative number represented by its base-10 logarithm.

    Exact zero is flagged separately; ``log10`` is then ``-inf``.
    """

    log10: float
    is_zero: bool = False

    @classmethod
    def zero(cls) -> "LogQuantity":
        return cls(-math.inf, True)

    @classmethod
    def one(cls) -> "LogQuantity":
        return cls(0.0)

    @property
    def exponent(self) -> int:
        """Integer part of the decimal exponent (floor of ``log10``)."""
        if self.is_zero:
            raise ValueError("zero has no decimal exponent")
        return math.floor(self.log10)

    @property
    def mantissa(self) -> float:
        """Mantissa in [1, 10) such that value = mantissa × 10^exponent."""
        if self.is_zero:
            return 0.0
        return 10.0 ** (self.log10 - self.exponent)

    def to_float(self) -> float:
        """Plain float value; ``inf`` when the magnitude overflows."""
        if self.is_zero:
            return 0.0
        try:
            return 10.0**self.log10
        except OverflowError:
            return math.inf

    def __mul__(self, other: "LogQuantity") -> "LogQuantity":
        return lq_mul(self, other)

    def __truediv__(self, other: "LogQuantity") -> "LogQuantity":
        return lq_div(self, other)

    def __add__(self, other: "LogQuantity") -> "LogQuantity":
        return lq_add(self, other)

    def __pow__(self, k: float) -> "LogQuantity":
        return lq_pow(self, k)

    def __lt__(self, other: "LogQuantity") -> bool:
        return self.log10 < other.log10

    def __le__(self, other: "LogQuantity") -> bool:
        return self.log10 <= other.log10

    def __str__(self) -> str:
        return lq_format(self)


def lq_from(value: int | float) -> LogQuantity:
    """
    Convert a plain nonnegative number (int of any size, or float).

    Raises:
        NegativeQuantityError: If value is negative.
    """
    if value < 0:
        raise NegativeQuantityError(f"LogQuantity cannot hold negative value {value}")
    if value == 0:
        return LogQuantity.zero()
    # math.log10 accepts arbitrarily large ints without overflow
    return LogQuantity(math.log10(value))


def lq_mul(a: LogQuantity, b: LogQuantity) -> LogQuantity:
    if a.is_zero or b.is_zero:
        return LogQuantity.zero()
    return LogQuantity(a.log10 + b.log10)


def lq_div(a: LogQuantity, b: LogQuantity) -> LogQuantity:
    if b.is_zero:
        raise LogDomainZeroDivisionError("division by an exact-zero LogQuantity")
    if a.is_zero:
        return LogQuantity.zero()
    return LogQuantity(a.log10 - b.log10)


def lq_pow(a: LogQuantity, k: float) -> LogQuantity:
    if k == 0:
        return LogQuantity.one()
    if a.is_zero:
        if k < 0:
            raise LogDomainZeroDivisionError(
                "zero cannot be raised to a negative power"
            )
        return LogQuantity.zero()
    return LogQuantity(a.log10 * k)


def lq_add(a: LogQuantity, b: LogQuantity) -> LogQuantity:
    """Base-10 log-sum-exp: max + log10(1 + 10^(min - max))."""
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    hi, lo = (a.log10, b.log10) if a.log10 >= b.log10 else (b.log10, a.log10)
    return LogQuantity(hi + math.log1p(10.0 ** (lo - hi)) / _LN10)


def lq_sum(values) -> LogQuantity:
    """Sum an iterable of LogQuantity values."""
    total = LogQuantity.zero()
    for value in values:
        total = lq_add(total, value)
    return total


def _group_int(n: int) -> str:
    return f"{n:,}"


def _strip_zeros(text: str) -> str:
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def lq_format(a: LogQuantity, significant_digits: int = 2) -> str:
    """
    Render as ``mantissa×10^exponent``, or as a plain decimal when the
    exponent lies in [-3, 6].

    Plain decimals never drop integer digits (73,000 stays 73,000).
    Above exponent 1000 the mantissa is suppressed: ``10^42,277``.
    """
    if a.is_zero:
        return "0"
    if significant_digits < 1:
        raise ValueError("significant_digits must be at least 1")

    exponent = a.exponent
    if abs(a.log10) > MANTISSA_SUPPRESSION_EXPONENT:
        return f"10^{_group_int(exponent)}"

    if -3 <= exponent <= 6:
        value = a.to_float()
        decimals = max(0, significant_digits - 1 - exponent)
        rounded = round(value, decimals)
        if decimals == 0:
            return _group_int(int(rounded))
        return _strip_zeros(f"{rounded:.{decimals}f}")

    mantissa = round(a.mantissa, significant_digits - 1)
    if mantissa >= 10.0:
        mantissa /= 10.0
        exponent += 1
    return f"{mantissa:.{significant_digits - 1}f}×10^{exponent}"


def exact_power(base: int, exponent: int) -> int:
    """
    Exact big-integer base**exponent for test oracles.

    Raises:
        InputError: If the result would exceed the exact digit limit.
    """
    if base < 0 or exponent < 0:
        raise InputError("exact_power needs a nonnegative base and exponent")
    if base > 1 and exponent * math.log10(base) > EXACT_DIGIT_LIMIT:
        raise InputError(
            f"{base}^{exponent} has more than {EXACT_DIGIT_LIMIT} digits; "
            "use the log-domain path"
        )
    return base**exponent
