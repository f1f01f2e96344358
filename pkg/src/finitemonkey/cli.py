"""
finitemonkey CLI Entry Point.
"""

import argparse
import sys
import time
import traceback
from dataclasses import asdict, fields
from pathlib import Path

from finitemonkey import __version__
from finitemonkey.estimation.entropy import METHODS, NGRAM
from finitemonkey.reporting.renderer import render
from finitemonkey.reporting.reports import (
    Report,
    benchmark_report,
    corpus_report,
    estimate_report,
    presets_report,
    quote_report,
    simulate_report,
    table_report,
)
from finitemonkey.support.config import FORMATS, MODES, Config, resolve_config
from finitemonkey.support.exceptions import MonkeyError, UsageError
from finitemonkey.support.file_operations import STDIN_PATH, read_corpus
from finitemonkey.watch import watch_corpus

CONFIG_FIELDS = tuple(f.name for f in fields(Config))


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser whose errors are usage errors (exit code 1)."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False, allow_abbrev=False)

    model = common.add_argument_group("monkey and typing speed")
    model.add_argument(
        "--h",
        dest="h",
        metavar="BITS",
        help="Entropy rate in bits/character, or a preset key (default: 0.863).",
    )
    model.add_argument(
        "--m", dest="m", type=int, help="Alphabet size of the random monkey (27)."
    )
    model.add_argument("--wpm", type=float, help="Typing speed in words/minute (52).")
    model.add_argument("--chars-per-word", type=float, help="Characters per word (5).")
    model.add_argument("--hours-per-day", type=float, help="Typing hours per day (24).")
    model.add_argument("--days-per-year", type=float, help="Days per year (365).")

    output = common.add_argument_group("output")
    output.add_argument(
        "--mode",
        choices=MODES,
        help="rounded (published display rule), precise, or exact (border sum).",
    )
    output.add_argument("--format", choices=FORMATS, help="Output format (table).")

    runs = common.add_argument_group("estimation and simulation")
    runs.add_argument("--trials", type=int, help="Simulation trials (10000).")
    runs.add_argument("--seed", type=int, help="Base random seed (0).")
    runs.add_argument("--window", type=int, help="Match-length window W (65536).")
    runs.add_argument("--ngram-order", type=int, help="n-gram block length (3).")
    runs.add_argument(
        "--workers", type=int, help="Worker processes for simulation and counting (1)."
    )

    common.add_argument("--config", help="Path to pyproject.toml configuration file.")
    common.add_argument(
        "--verbose", "-v", action="store_true", help="Print diagnostics to stderr."
    )
    return common


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = ArgumentParser(
        prog="finitemonkey",
        description="finitemonkey: how long would a monkey take to type it?",
        allow_abbrev=False,
    )
    parser.add_argument(
        "--version", action="version", version=f"finitemonkey {__version__}"
    )
    common = _common_options()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(
            name, parents=[common], help=help_text, allow_abbrev=False
        )

    quote = add("quote", "Waiting times for a phrase.")
    quote.add_argument("phrase", nargs="+", help="The phrase (words are joined).")

    corpus = add("corpus", "Waiting times for a whole text file.")
    corpus.add_argument("file", help="UTF-8 text file, or - for standard input.")
    corpus.add_argument(
        "--strip-gutenberg",
        action="store_true",
        help="Drop the Project Gutenberg header and license trailer first.",
    )
    corpus.add_argument(
        "--watch",
        action="store_true",
        help="Re-run the report whenever the file is saved.",
    )

    table = add("table", "The built-in phrase gallery.")
    table.add_argument(
        "--with-extras",
        action="store_true",
        help="Also include the supplementary phrases.",
    )

    estimate = add("estimate", "Estimate the entropy rate of a text file.")
    estimate.add_argument("file", help="UTF-8 text file, or - for standard input.")
    estimate.add_argument(
        "--method", choices=METHODS, default=NGRAM, help="Estimator (ngram)."
    )
    estimate.add_argument(
        "--parameter",
        type=int,
        help="n for ngram, W for matchlen (default: --ngram-order / --window).",
    )
    estimate.add_argument(
        "--strip-gutenberg",
        action="store_true",
        help="Drop the Project Gutenberg header and license trailer first.",
    )

    simulate = add("simulate", "Monte Carlo waiting times for a pattern.")
    simulate.add_argument(
        "pattern", nargs="?", help="Pattern over the first m canonical symbols."
    )
    simulate.add_argument(
        "--benchmark",
        type=float,
        metavar="SECONDS",
        help="Measure generation and matching throughput instead.",
    )

    add("presets", "Published entropy-rate estimates for English.")

    return parser.parse_args(argv)


def _config_arguments(args: argparse.Namespace) -> dict:
    return {name: getattr(args, name, None) for name in CONFIG_FIELDS}


def _render(report: Report, config: Config) -> str:
    return render(
        report.rows, config.format, report.title, report.footnotes, report.single
    )


def _emit(report: Report, config: Config, verbose: bool) -> int:
    if verbose:
        for note in report.notes:
            print(note, file=sys.stderr)
    print(_render(report, config))
    return 0


def cmd_quote(args: argparse.Namespace, config: Config) -> int:
    return _emit(quote_report(" ".join(args.phrase), config), config, args.verbose)


def cmd_corpus(args: argparse.Namespace, config: Config) -> int:
    if args.watch:
        if args.file == STDIN_PATH:
            raise UsageError("--watch needs a file path, not standard input")

        def report_for(path: Path) -> str:
            report = corpus_report(
                str(path), read_corpus(path), config, args.strip_gutenberg
            )
            return _render(report, config)

        watch_corpus(Path(args.file), report_for)
        return 0

    report = corpus_report(
        args.file, read_corpus(args.file), config, args.strip_gutenberg
    )
    return _emit(report, config, args.verbose)


def cmd_table(args: argparse.Namespace, config: Config) -> int:
    return _emit(table_report(config, args.with_extras), config, args.verbose)


def cmd_estimate(args: argparse.Namespace, config: Config) -> int:
    report = estimate_report(
        args.file,
        read_corpus(args.file),
        args.method,
        config,
        args.parameter,
        args.strip_gutenberg,
    )
    return _emit(report, config, args.verbose)


def cmd_simulate(args: argparse.Namespace, config: Config) -> int:
    if args.benchmark is not None:
        if args.benchmark < 0:
            raise UsageError("--benchmark needs a nonnegative number of seconds")
        return _emit(benchmark_report(config, args.benchmark), config, args.verbose)
    if args.pattern is None:
        raise UsageError("simulate needs a PATTERN unless --benchmark is given")
    return _emit(simulate_report(args.pattern, config), config, args.verbose)


def cmd_presets(args: argparse.Namespace, config: Config) -> int:
    return _emit(presets_report(), config, args.verbose)


COMMANDS = {
    "quote": cmd_quote,
    "corpus": cmd_corpus,
    "table": cmd_table,
    "estimate": cmd_estimate,
    "simulate": cmd_simulate,
    "presets": cmd_presets,
}


def run(args: argparse.Namespace) -> int:
    """Main command logic.
    Returns exit code (0 success, 1 usage error, 2 input or data error).
    """
    verbose = getattr(args, "verbose", False)
    try:
        config_path = Path(args.config) if args.config else None
        config = resolve_config(config_path, _config_arguments(args))
        if verbose:
            print(f"Configuration: {asdict(config)}", file=sys.stderr)

        started = time.perf_counter()
        code = COMMANDS[args.command](args, config)
        if verbose:
            elapsed = time.perf_counter() - started
            print(f"Finished {args.command} in {elapsed:.3f}s", file=sys.stderr)
        return code

    except MonkeyError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except KeyboardInterrupt:
        return 0
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        if verbose:
            traceback.print_exc()
        return 2


def main(argv: list[str] | None = None):
    """Entry point for console script."""
    try:
        args = parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(e.exit_code)
    sys.exit(run(args))


if __name__ == "__main__":
    main()
