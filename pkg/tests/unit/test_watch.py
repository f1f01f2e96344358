"""
Unit tests for watch module.
"""

import time
from pathlib import Path
from unittest.mock import MagicMock, Mock, patch

from watchdog.events import (
    DirModifiedEvent,
    FileCreatedEvent,
    FileModifiedEvent,
    FileMovedEvent,
)

from finitemonkey.support.exceptions import InputError
from finitemonkey.watch import DebounceHandler, watch_corpus


def test_debounce_handler_ignores_directories(tmp_path):
    """Test that handler ignores directory events."""
    callback = Mock()
    handler = DebounceHandler(tmp_path / "corpus.txt", callback, debounce_seconds=0.1)

    handler.on_modified(DirModifiedEvent(str(tmp_path)))

    callback.assert_not_called()


def test_debounce_handler_ignores_other_files(tmp_path):
    """Test that handler ignores files other than the watched corpus."""
    callback = Mock()
    handler = DebounceHandler(tmp_path / "corpus.txt", callback, debounce_seconds=0.1)

    handler.on_modified(FileModifiedEvent(str(tmp_path / "notes.txt")))

    callback.assert_not_called()


def test_debounce_handler_processes_target(tmp_path):
    """Test that handler processes modifications of the watched corpus."""
    target = tmp_path / "corpus.txt"
    callback = Mock()
    handler = DebounceHandler(target, callback, debounce_seconds=0.1)

    handler.on_modified(FileModifiedEvent(str(target)))

    callback.assert_called_once_with(target.resolve())


def test_debounce_handler_processes_created_and_moved(tmp_path):
    """Test that atomic saves (create or rename onto the target) are seen."""
    target = tmp_path / "corpus.txt"
    callback = Mock()
    handler = DebounceHandler(target, callback, debounce_seconds=0.0)

    handler.on_created(FileCreatedEvent(str(target)))
    handler.last_processed = 0.0
    handler.on_moved(FileMovedEvent(str(tmp_path / ".corpus.swp"), str(target)))

    assert callback.call_count == 2


def test_debounce_handler_debounces_rapid_changes(tmp_path):
    """Test that handler debounces rapid successive changes."""
    target = tmp_path / "corpus.txt"
    callback = Mock()
    handler = DebounceHandler(target, callback, debounce_seconds=0.2)

    event = FileModifiedEvent(str(target))

    # First event should be processed
    handler.on_modified(event)
    assert callback.call_count == 1

    # Immediate second event should be debounced
    handler.on_modified(event)
    assert callback.call_count == 1

    # After debounce period, should be processed again
    time.sleep(0.25)
    handler.on_modified(event)
    assert callback.call_count == 2


@patch("finitemonkey.watch.Observer")
def test_watch_corpus_starts_observer(mock_observer_class, tmp_path, capsys):
    """Test that watch_corpus prints a first report and starts the observer."""
    mock_observer = MagicMock()
    mock_observer_class.return_value = mock_observer
    mock_observer.start.side_effect = KeyboardInterrupt()

    corpus = tmp_path / "corpus.txt"
    corpus.write_text("to be or not to be", encoding="utf-8")
    report_func = Mock(return_value="REPORT")

    watch_corpus(corpus, report_func)

    report_func.assert_called_once_with(corpus)
    mock_observer.schedule.assert_called_once()
    args, kwargs = mock_observer.schedule.call_args
    assert args[1] == str(tmp_path.resolve())
    assert kwargs == {"recursive": False}
    mock_observer.stop.assert_called_once()
    mock_observer.join.assert_called_once()

    out = capsys.readouterr().out
    assert "REPORT" in out
    assert "Watch mode stopped." in out


@patch("finitemonkey.watch.Observer")
def test_watch_corpus_reports_errors_and_keeps_going(mock_observer_class, capsys):
    """Test that a failing report is printed as an error line, not raised."""
    mock_observer = MagicMock()
    mock_observer_class.return_value = mock_observer
    mock_observer.start.side_effect = KeyboardInterrupt()

    report_func = Mock(side_effect=InputError("File not found: corpus.txt"))

    watch_corpus(Path("/fake/corpus.txt"), report_func)

    out = capsys.readouterr().out
    assert "✗ Error processing corpus.txt" in out
    mock_observer.stop.assert_called_once()
