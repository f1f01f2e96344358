"""
Corpus file I/O.
"""

import sys
from pathlib import Path

from finitemonkey.support.exceptions import CorpusDecodeError, InputError

STDIN_PATH = "-"


def read_bytes(path: str | Path) -> bytes:
    """Raw bytes of a file, or of standard input for ``-``."""
    if str(path) == STDIN_PATH:
        return sys.stdin.buffer.read()
    path = Path(path)
    if not path.exists():
        raise InputError(f"File not found: {path}")
    if path.is_dir():
        raise InputError(f"Expected a file, got a directory: {path}")
    try:
        return path.read_bytes()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror or e}") from e


def decode_utf8(data: bytes, source: str) -> str:
    """Decode UTF-8, reporting the byte offset of the first bad sequence."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusDecodeError(source, e.start, e.reason) from e
    return text.removeprefix("\ufeff")


def read_corpus(path: str | Path) -> str:
    """Read a UTF-8 corpus file (``-`` for standard input)."""
    source = "<stdin>" if str(path) == STDIN_PATH else str(path)
    return decode_utf8(read_bytes(path), source)
