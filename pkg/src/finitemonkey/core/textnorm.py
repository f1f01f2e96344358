"""
Text normalization: raw quotes, poems and plays to the plain 27-character
alphabet (lower-case letters plus space).
"""

import re

from finitemonkey.support.models import Alphabet, NormalizedText

_GUTENBERG_START = re.compile(
    r"^\*{3}\s*START\s+OF\s+(THE|THIS)?\s*PROJECT\s+GUTENBERG", re.IGNORECASE
)
_GUTENBERG_END = re.compile(
    r"^\*{3}\s*END\s+OF\s+(THE|THIS)?\s*PROJECT\s+GUTENBERG", re.IGNORECASE
)


def normalize(raw: str, alphabet: Alphabet | None = None) -> NormalizedText:
    """
    Lower-case, map all whitespace to space, delete every character outside
    the alphabet, collapse space runs and trim.

    Punctuation is deleted with no replacement ("I'll" -> "ill"); accented
    letters are dropped, not transliterated.
    """
    alphabet = alphabet or Alphabet.canonical()
    keep_space = " " in alphabet

    chars = []
    previous_space = True  # suppresses leading spaces
    for ch in raw.lower():
        if ch.isspace():
            if keep_space and not previous_space:
                chars.append(" ")
                previous_space = True
            continue
        if ch in alphabet and ch != " ":
            chars.append(ch)
            previous_space = False

    if chars and chars[-1] == " ":
        chars.pop()
    return NormalizedText("".join(chars), alphabet)


def text_length(text: NormalizedText) -> int:
    return text.length


def strip_gutenberg_envelope(raw: str) -> str:
    """
    Drop the Project Gutenberg header and license trailer, keeping the text
    between the START and END marker lines. Texts without markers are
    returned unchanged.
    """
    lines = raw.splitlines()
    start, end = 0, len(lines)
    for i, line in enumerate(lines):
        if _GUTENBERG_START.search(line.strip()):
            start = i + 1
            break
    for i in range(len(lines) - 1, start - 1, -1):
        if _GUTENBERG_END.search(lines[i].strip()):
            end = i
            break
    if start == 0 and end == len(lines):
        return raw
    return "\n".join(lines[start:end])
