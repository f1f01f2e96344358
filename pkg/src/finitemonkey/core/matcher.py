"""
Single-pattern first-occurrence matching with a failure-function automaton.
"""

import numpy as np

from finitemonkey.support.exceptions import InputError, PatternAlphabetError
from finitemonkey.support.models import Alphabet


def failure_function(codes) -> list[int]:
    """
    Border array: failure[j] is the length of the longest proper border of
    the length-j prefix. failure[0] = failure[1] = 0.
    """
    n = len(codes)
    failure = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k > 0 and codes[i] != codes[k]:
            k = failure[k]
        if codes[i] == codes[k]:
            k += 1
        failure[i + 1] = k
    return failure


def borders(pattern) -> set[int]:
    """
    Lengths j such that the length-j prefix equals the length-j suffix,
    including the full length.
    """
    if len(pattern) == 0:
        raise InputError("borders need a nonempty pattern")
    failure = failure_function(pattern)
    result = set()
    j = len(pattern)
    while j > 0:
        result.add(j)
        j = failure[j]
    return result


class PatternMatcher:
    """
    Streaming automaton that reports the first completed occurrence.

    ``state`` is the length of the longest pattern prefix that is a suffix
    of everything fed so far; it reaches ``length`` on a match.
    """

    def __init__(self, pattern: str, alphabet: Alphabet):
        if not pattern:
            raise InputError("cannot match an empty pattern")
        stray = "".join(sorted({ch for ch in pattern if ch not in alphabet}))
        if stray:
            raise PatternAlphabetError(pattern, stray)
        self.pattern = pattern
        self.alphabet = alphabet
        self.codes = np.asarray(alphabet.encode(pattern), dtype=np.int64)
        self._code_list = self.codes.tolist()
        self.failure = failure_function(self._code_list)
        self.state = 0

    @property
    def length(self) -> int:
        return len(self._code_list)

    def reset(self):
        self.state = 0

    def step(self, code: int) -> bool:
        """Advance by one symbol code; True when the pattern has just completed."""
        k = self.state
        if k == self.length:
            k = self.failure[k]
        while k > 0 and code != self._code_list[k]:
            k = self.failure[k]
        if code == self._code_list[k]:
            k += 1
        self.state = k
        return k == self.length

    def first_occurrence(self, codes) -> int:
        """
        Feed codes one at a time; return the 1-based index of the symbol
        completing the first occurrence, or -1.
        """
        for i, code in enumerate(codes):
            if self.step(int(code)):
                return i + 1
        return -1

    def scan(self, chunk: np.ndarray) -> int:
        """
        Vectorized equivalent of feeding ``chunk``: returns the 1-based index
        within the chunk of the first completed occurrence, or -1, and leaves
        the automaton in the state it would reach.
        """
        n = len(chunk)
        if n == 0:
            return -1
        carry = self.state if self.state < self.length else self.failure[self.length]
        stream = np.concatenate((self.codes[:carry], chunk)) if carry else chunk
        if len(stream) >= self.length:
            starts = len(stream) - self.length + 1
            mask = stream[:starts] == self.codes[0]
            for j in range(1, self.length):
                if not mask.any():
                    break
                mask &= stream[j : j + starts] == self.codes[j]
            hits = np.flatnonzero(mask)
            if hits.size:
                end = int(hits[0]) + self.length - carry
                self.state = self.length
                return end

        # no match: the new state depends only on the last length-1 symbols
        self.state = 0
        tail = stream[-(self.length - 1):] if self.length > 1 else stream[:0]
        for code in tail.tolist():
            self.step(code)
        return -1
