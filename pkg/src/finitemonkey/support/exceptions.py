"""
Custom exceptions for finitemonkey.

Every error carries the process exit code the CLI reports for it:
1 for usage errors, 2 for input and data errors.
"""


class MonkeyError(Exception):
    """Base exception for all finitemonkey errors."""

    exit_code = 2


class UsageError(MonkeyError):
    """Raised for invalid command-line usage or option values."""

    exit_code = 1


class ConfigError(UsageError):
    """Raised when the merged configuration is invalid."""

    def __init__(self, field_name: str, value, message: str):
        self.field_name = field_name
        self.value = value
        self.message = message
        super().__init__(f"Invalid value for {field_name} ({value!r}): {message}")


class RoundedRuleError(UsageError):
    """Raised when the rounded rule is requested for a model it does not cover."""

    pass


class InputError(MonkeyError):
    """Raised when input files or data cannot be used."""

    pass


class CorpusDecodeError(InputError):
    """Raised when a corpus is not valid UTF-8."""

    def __init__(self, path: str, offset: int, reason: str):
        self.path = path
        self.offset = offset
        self.reason = reason
        super().__init__(
            f"Invalid UTF-8 in {path} at byte offset {offset}: {reason}"
        )


class EmptyTextError(InputError):
    """Raised when a text normalizes to nothing but a non-empty text is needed."""

    pass


class TextTooShortError(InputError):
    """Raised when a text is too short for the requested estimator."""

    def __init__(self, length: int, required: int, what: str):
        self.length = length
        self.required = required
        super().__init__(
            f"Text of length {length} is too short for {what} "
            f"(needs at least {required} characters)"
        )


class PatternAlphabetError(InputError):
    """Raised when a pattern uses symbols outside the source alphabet."""

    def __init__(self, pattern: str, symbols: str):
        self.pattern = pattern
        self.symbols = symbols
        super().__init__(
            f"Pattern {pattern!r} contains symbols outside the source "
            f"alphabet: {symbols!r}"
        )


class ModelError(ValueError, MonkeyError):
    """Raised when a monkey model, Markov source or typing speed is invalid."""

    pass


class ReducibleChainError(ModelError):
    """Raised when a Markov source is not irreducible."""

    pass


class NegativeQuantityError(ValueError, MonkeyError):
    """Raised when a negative number is converted to a LogQuantity."""

    pass


class LogDomainZeroDivisionError(ZeroDivisionError, MonkeyError):
    """Raised when dividing by an exact-zero LogQuantity."""

    pass
