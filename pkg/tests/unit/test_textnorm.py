"""
Unit tests for textnorm module.
"""

import pytest

from finitemonkey.core.textnorm import (
    normalize,
    strip_gutenberg_envelope,
    text_length,
)
from finitemonkey.support.models import Alphabet


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("Me, we", "me we"),
        ("I'll be back", "ill be back"),
        ("To be, or not to be", "to be or not to be"),
        ("  To\tbe\n\nor  ", "to be or"),
        (
            "It is the courage to continue that counts.",
            "it is the courage to continue that counts",
        ),
    ],
)
def test_normalize_examples(raw, expected):
    assert normalize(raw).content == expected


def test_normalize_drops_digits_and_accents():
    """Accented letters are dropped, not transliterated."""
    assert normalize("café 42 x").content == "caf x"


def test_normalize_empty_and_punctuation_only():
    assert normalize("").length == 0
    assert normalize("!?, ...\n").content == ""


def test_normalize_is_idempotent():
    once = normalize("The die -- is CAST!\n\n")
    assert normalize(once.content) == once


def test_normalize_without_space_symbol():
    text = normalize("a b\nba c", Alphabet.of_size(2))
    assert text.content == "abba"
    assert text.alphabet.size == 2


def test_text_length_counts_spaces():
    assert text_length(normalize("Me, we")) == 5
    spice = "I'll tell you what I want, what I really really want"
    assert text_length(normalize(spice)) == 50


def test_strip_gutenberg_envelope():
    raw = "\n".join(
        [
            "The Project Gutenberg eBook of Hamlet",
            "Release date: whenever",
            "*** START OF THE PROJECT GUTENBERG EBOOK HAMLET ***",
            "To be or not to be",
            "*** END OF THE PROJECT GUTENBERG EBOOK HAMLET ***",
            "License text follows",
        ]
    )
    assert strip_gutenberg_envelope(raw) == "To be or not to be"


def test_strip_gutenberg_envelope_without_markers():
    raw = "No markers here.\nJust text."
    assert strip_gutenberg_envelope(raw) == raw
