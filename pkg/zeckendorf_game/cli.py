"""Command-line interface for the Zeckendorf game toolkit.

Results go to stdout (or --out) as JSON documents carrying a top-level
"schema" field; logging and error messages go to stderr.
"""

from __future__ import annotations

import argparse
import asyncio
from collections.abc import Iterable
import csv
import io
import json
import logging
from pathlib import Path
import sys
from typing import Any

from .analysis import enumerate_games, solve_winner
from .config import (
    CONF_BINS,
    CONF_CAP,
    CONF_CONSTANT,
    CONF_COUNT,
    CONF_FORMAT,
    CONF_FROM,
    CONF_GAMES,
    CONF_N,
    CONF_OUT,
    CONF_RANDOM_SEEDS,
    CONF_SEED,
    CONF_STANDARDIZED,
    CONF_START,
    CONF_STRATEGIES,
    CONF_STRATEGY,
    CONF_STRICT,
    CONF_THREADS,
    CONF_TO,
    CliConfig,
    validate_input,
)
from .const import (
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_RANDOM_SEEDS_PER_N,
    DEFAULT_SEED,
    DEFAULT_STATE_CAP,
    DEFAULT_THREADS,
    DOMAIN,
    MIN_NORMALITY_GAMES,
    SCHEMA_VERSION,
)
from .exceptions import InvalidConfig, ZeckendorfError
from .fibcore import (
    imax_bound,
    index_sum_bound,
    legacy_upper_bound,
    move_bounds,
    zeckendorf,
)
from .stats import (
    GameRow,
    async_growth_scan,
    async_run_batch,
    batch_conjecture_checks,
    normality_report,
    residual_histogram,
)
from .strategies import get_strategy, play_out
from .verify import async_verify_range

_LOGGER = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
CSV_COLUMNS = ("game_index", "seed", "total_moves", "splits")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser; values are coerced during validation."""
    parser = argparse.ArgumentParser(
        prog="zeckendorf-game",
        description="Play, analyze and verify the two-player Zeckendorf game.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO with -v, DEBUG with -vv",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    decompose = commands.add_parser("decompose", help="Zeckendorf decomposition of N")
    decompose.add_argument("n", metavar="N")

    simulate = commands.add_parser("simulate", help="play one game")
    simulate.add_argument("--n", required=True)
    simulate.add_argument("--strategy", required=True)
    simulate.add_argument("--seed", default=DEFAULT_SEED)
    simulate.add_argument(
        "--strict", action="store_true", help="check every invariant after every move"
    )

    batch = commands.add_parser("batch", help="play many random games on N")
    batch.add_argument("--n", required=True)
    batch.add_argument("--games", required=True)
    batch.add_argument("--seed", default=DEFAULT_SEED)
    batch.add_argument("--bins", default=None)
    batch.add_argument("--out", default=None)
    batch.add_argument("--format", default=DEFAULT_OUTPUT_FORMAT)
    batch.add_argument("--threads", default=DEFAULT_THREADS)
    batch.add_argument(
        "--standardized",
        action="store_true",
        help="histogram of z-scores instead of raw split counts",
    )

    for name, text in (
        ("enumerate", "longest, shortest and number of games on N"),
        ("solve", "winner of the game on N under optimal play"),
    ):
        analysis = commands.add_parser(name, help=text)
        analysis.add_argument("--n", required=True)
        analysis.add_argument("--cap", default=DEFAULT_STATE_CAP)

    growth = commands.add_parser("growth", help="deterministic game lengths over n")
    growth.add_argument("--strategy", required=True)
    growth.add_argument("--start", required=True)
    growth.add_argument("--count", required=True)
    growth.add_argument("--constant", default=None)
    growth.add_argument("--out", default=None)
    growth.add_argument("--threads", default=DEFAULT_THREADS)

    verify = commands.add_parser("verify", help="check every identity over a range")
    verify.add_argument("--from", dest=CONF_FROM, required=True)
    verify.add_argument("--to", dest=CONF_TO, required=True)
    verify.add_argument("--strategies", default="all")
    verify.add_argument("--random-seeds", default=DEFAULT_RANDOM_SEEDS_PER_N)
    verify.add_argument("--seed", default=DEFAULT_SEED)
    verify.add_argument("--threads", default=DEFAULT_THREADS)

    return parser


def setup_logging(verbosity: int) -> None:
    """Send log records to stderr at the level chosen by -v flags."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger(DOMAIN).setLevel(level)


def _document(payload: dict[str, Any]) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2)


def _emit(text: str, out: str | None) -> None:
    """Write text to the output file, or stdout when none is given."""
    if out is None:
        sys.stdout.write(text + "\n")
        return
    Path(out).write_text(text + "\n", encoding="utf-8")
    _LOGGER.info("Wrote %s", out)


def _decompose(config: CliConfig) -> int:
    n = config[CONF_N]
    lower, upper = move_bounds(n)
    payload = zeckendorf(n).to_dict()
    payload.update(
        {
            "lower_bound": lower,
            "upper_bound": upper,
            "legacy_upper_bound": legacy_upper_bound(n),
            "imax_bound": imax_bound(n),
            "index_sum_bound": index_sum_bound(n),
        }
    )
    _emit(_document(payload), None)
    return 0


def _simulate(config: CliConfig) -> int:
    strategy = get_strategy(config[CONF_STRATEGY], config[CONF_SEED])
    record = play_out(strategy, config[CONF_N], strict=config[CONF_STRICT])
    _emit(_document(record.to_dict()), None)
    return 0 if record.report.passed else 1


def _rows_csv(rows: Iterable[GameRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow((row.game_index, row.seed, row.total_moves, row.splits))
    return buffer.getvalue().rstrip("\n")


async def _async_batch(config: CliConfig) -> int:
    summary = await async_run_batch(
        config[CONF_N],
        config[CONF_GAMES],
        config[CONF_SEED],
        bins=config[CONF_BINS],
        standardized=config[CONF_STANDARDIZED],
        threads=config[CONF_THREADS],
    )

    if config[CONF_FORMAT] == "csv":
        _emit(_rows_csv(summary.rows), config[CONF_OUT])
        return 0

    report = None
    if summary.games >= MIN_NORMALITY_GAMES and summary.splits_variance > 0:
        report = normality_report(summary)
    payload = summary.to_dict()
    payload["normality"] = None if report is None else report.to_dict()
    payload["conjecture"] = batch_conjecture_checks(summary, report)
    _emit(_document(payload), config[CONF_OUT])
    return 0


def _enumerate(config: CliConfig) -> int:
    stats = enumerate_games(config[CONF_N], config[CONF_CAP])
    _emit(_document(stats.to_dict()), None)
    return 0


def _solve(config: CliConfig) -> int:
    result = solve_winner(config[CONF_N], config[CONF_CAP])
    _emit(_document(result.to_dict()), None)
    return 0


async def _async_growth(config: CliConfig) -> int:
    series = await async_growth_scan(
        get_strategy(config[CONF_STRATEGY]),
        config[CONF_START],
        config[CONF_COUNT],
        config[CONF_CONSTANT],
        threads=config[CONF_THREADS],
    )
    payload = series.to_dict()
    payload["max_relative_residual"] = series.max_relative_residual()
    payload["conjecture_holds"] = series.conjecture_holds()
    payload["residual_histogram"] = [
        [left, count] for left, count in residual_histogram(series)
    ]
    if not payload["conjecture_holds"]:
        _LOGGER.warning(
            "Conjecture mismatch for %s: max |residual|/n = %.5f",
            series.strategy,
            payload["max_relative_residual"],
        )
    _emit(_document(payload), config[CONF_OUT])
    return 0


async def _async_verify(config: CliConfig) -> int:
    summary = await async_verify_range(
        config[CONF_FROM],
        config[CONF_TO],
        config[CONF_STRATEGIES],
        random_seeds=config[CONF_RANDOM_SEEDS],
        master_seed=config[CONF_SEED],
        threads=config[CONF_THREADS],
    )
    _emit(_document(summary.to_dict()), None)
    return 0 if summary.passed else 1


async def async_run_command(config: CliConfig) -> int:
    """Run one validated command and return its exit code."""
    _LOGGER.debug("Running %s with %s", config.command, config.options)
    match config.command:
        case "decompose":
            return _decompose(config)
        case "simulate":
            return _simulate(config)
        case "batch":
            return await _async_batch(config)
        case "enumerate":
            return _enumerate(config)
        case "solve":
            return _solve(config)
        case "growth":
            return await _async_growth(config)
        case "verify":
            return await _async_verify(config)
    raise InvalidConfig(f"Unknown command {config.command!r}")


def run_cli(argv: list[str]) -> int:
    """Parse, validate and run one command; return the process exit code.

    0 on success, 2 on a usage error, 1 on a computation error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    setup_logging(args.verbose)
    data = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "verbose")
    }

    try:
        config = validate_input(args.command, data)
    except InvalidConfig as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    try:
        return asyncio.run(async_run_command(config))
    except ZeckendorfError as err:
        _LOGGER.error("%s failed: %s", config.command, err)
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        _LOGGER.error("Cannot write output: %s", err)
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    """Console entry point."""
    sys.exit(run_cli(sys.argv[1:]))
