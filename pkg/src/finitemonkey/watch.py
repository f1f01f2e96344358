"""
Watch mode for finitemonkey - re-run the corpus report whenever the corpus
file is saved.
"""

import time
from datetime import datetime
from pathlib import Path

from watchdog.events import FileSystemEvent, FileSystemEventHandler
from watchdog.observers import Observer

from finitemonkey.support.exceptions import MonkeyError


class DebounceHandler(FileSystemEventHandler):
    """File system event handler for one file, with debouncing."""

    def __init__(self, target: Path, callback, debounce_seconds: float = 0.5):
        """
        Initialize handler.

        Args:
            target: The watched file; events for other files are ignored
            callback: Function to call when the file changes (receives its path)
            debounce_seconds: Minimum time between two runs of the callback
        """
        super().__init__()
        self.target = target.resolve()
        self.callback = callback
        self.debounce_seconds = debounce_seconds
        self.last_processed = 0.0

    def on_modified(self, event: FileSystemEvent):
        if not event.is_directory:
            self._process_event(event.src_path)

    def on_created(self, event: FileSystemEvent):
        if not event.is_directory:
            self._process_event(event.src_path)

    def on_moved(self, event: FileSystemEvent):
        # editors that save through a temporary file and rename it
        if not event.is_directory:
            self._process_event(event.dest_path)

    def _process_event(self, file_path: str):
        if Path(file_path).resolve() != self.target:
            return

        now = time.time()
        if now - self.last_processed < self.debounce_seconds:
            return

        self.last_processed = now
        self.callback(self.target)


def _timestamp() -> str:
    return datetime.now().strftime("%H:%M:%S")


def watch_corpus(corpus_path: Path, report_func, debounce_seconds: float = 0.5):
    """
    Print a report for the corpus now and after every save.

    Args:
        corpus_path: The corpus file to watch
        report_func: Function taking the path and returning the rendered report
        debounce_seconds: Minimum time between two reports
    """

    def on_file_change(file_path: Path):
        print(f"[{_timestamp()}] Detected change: {file_path.name} → re-reading...")
        try:
            print(report_func(file_path))
        except MonkeyError as e:
            print(f"[{_timestamp()}] ✗ Error processing {file_path.name}: {e}")

    try:
        print(report_func(corpus_path))
    except MonkeyError as e:
        print(f"[{_timestamp()}] ✗ Error processing {corpus_path.name}: {e}")

    handler = DebounceHandler(corpus_path, on_file_change, debounce_seconds)
    observer = Observer()
    observer.schedule(handler, str(corpus_path.resolve().parent), recursive=False)

    print(f"👀 Watching {corpus_path} for changes...")
    print("Press Ctrl+C to stop watching.")
    print()

    try:
        observer.start()
        while True:
            time.sleep(1)
    except KeyboardInterrupt:
        print("\n\nStopping watch mode...")
        observer.stop()

    observer.join()
    print("Watch mode stopped.")
