"""
Built-in phrase gallery, stored verbatim (before normalization).
"""

from dataclasses import dataclass

EXTERNAL_INPUT_REQUIRED = "external input required"


@dataclass(frozen=True)
class GalleryEntry:
    """A gallery phrase with the figures quoted for it."""

    label: str
    text: str | None  # None when the full text is not embedded
    attribution: str = ""
    quoted_educated: str = ""
    quoted_random: str = ""

    @property
    def is_external(self) -> bool:
        return self.text is None


_BUILTIN = (
    GalleryEntry(
        "Me, we", "Me, we", "Muhammad Ali", "4.6 seconds", "38.2 days"
    ),
    GalleryEntry(
        "I'll be back",
        "I'll be back",
        "The Terminator",
        "2.8 minutes",
        "40,581,179 years",
    ),
    GalleryEntry(
        "The die is cast",
        "The die is cast",
        "Julius Caesar",
        "about half an hour",
        "2.2×10^13 years",
    ),
    GalleryEntry(
        "May the Force be with you",
        "May the Force be with you",
        "Yoda",
        "8.4 days",
    ),
    GalleryEntry(
        "The only thing we have to fear is fear itself",
        "The only thing we have to fear is fear itself",
        "Franklin D. Roosevelt",
        "3,658 years",
    ),
    GalleryEntry(
        "I'll tell you what I want, what I really really want",
        "I'll tell you what I want, what I really really want",
        "Spice Girls",
        "73,000 years",
    ),
    GalleryEntry(
        "I can't get no satisfaction, ...",
        "I can't get no satisfaction, gonna try and I try and I try and I try",
        "Rolling Stones",
        "10^9 years",
    ),
    GalleryEntry(
        "Success is not final, ...",
        "Success is not final, failure is not fatal. "
        "It is the courage to continue that counts",
        "Winston Churchill",
        "2.7×10^13 years",
    ),
    GalleryEntry(
        "We are just an advanced breed of monkeys, ...",
        "We are just an advanced breed of monkeys on a minor planet of a "
        "very average star. But we can understand the Universe",
        "Stephen Hawking",
        "10^22 years",
    ),
    GalleryEntry(
        "To be or not to be",
        "To be or not to be",
        "Hamlet",
        "3 hours and 4 minutes",
        "4.2×10^17 years",
    ),
)

_EXTERNAL = (
    GalleryEntry("Title of the essay", None, "", "183.4 years"),
    GalleryEntry(
        '"Hope" is the thing with feathers', None, "Emily Dickinson", "5.5×10^79 years"
    ),
    GalleryEntry(
        "Twinkle twinkle little star", None, "lullaby", "8.4×10^142 years"
    ),
    GalleryEntry(
        "Hamlet (full play)",
        None,
        "William Shakespeare",
        "10^42,277 years",
        "10^232,784 years",
    ),
)

_EXTRAS = (
    GalleryEntry(
        "Better three hours too soon than a minute too late",
        "Better three hours too soon than a minute too late",
        "William Shakespeare",
        "73,000 years",
        "2.7×10^63 years",
    ),
)


def builtin_phrases() -> tuple[GalleryEntry, ...]:
    """Phrases whose full text is embedded, in gallery order."""
    return _BUILTIN


def external_entries() -> tuple[GalleryEntry, ...]:
    """Entries listed by name only; their text must be supplied as a corpus."""
    return _EXTERNAL


def extra_phrases() -> tuple[GalleryEntry, ...]:
    return _EXTRAS
