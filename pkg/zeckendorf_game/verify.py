"""Identity verification over ranges of n."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
from typing import Any

from .const import (
    DEFAULT_SEED,
    DEFAULT_THREADS,
    SHORTEST_GAME_STRATEGIES,
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST,
    STRATEGY_RANDOM,
    STRATEGY_SPLIT_SMALLEST,
)
from .coordinator import GameBatchCoordinator, GameJob
from .exceptions import DomainError
from .fibcore import zeckendorf

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class VerifyFailure:
    """One failed check in one game."""

    n: int
    strategy: str
    seed: int | None
    check: str

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "n": self.n,
            "strategy": self.strategy,
            "seed": self.seed,
            "check": self.check,
        }


@dataclass(slots=True)
class VerifySummary:
    """Outcome of verifying every game in a range of n."""

    n_from: int
    n_to: int
    strategies: tuple[str, ...]
    random_seeds: int
    games: int = 0
    failures: list[VerifyFailure] = field(default_factory=list)
    conjecture_checked: int = 0
    conjecture_mismatches: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Return True if no exact check failed."""
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "from": self.n_from,
            "to": self.n_to,
            "strategies": list(self.strategies),
            "random_seeds": self.random_seeds,
            "games": self.games,
            "passed": self.passed,
            "failures": [failure.to_dict() for failure in self.failures],
            "conjecture": {
                "split_smallest_equals_ones_first": {
                    "checked": self.conjecture_checked,
                    "mismatches": self.conjecture_mismatches,
                }
            },
        }


async def async_verify_range(
    n_from: int,
    n_to: int,
    strategies: Sequence[str],
    random_seeds: int = 0,
    master_seed: int = DEFAULT_SEED,
    threads: int = DEFAULT_THREADS,
) -> VerifySummary:
    """Play every strategy on every n in range and check every identity.

    Combine Largest, Split Largest and Greedy must also reach the lower
    bound with no splits. Split Smallest and its ones-first variant are
    compared as a conjecture and only reported.
    """
    if n_from < 1 or n_to < n_from:
        raise DomainError(f"Invalid range {n_from}..{n_to}")

    jobs = []
    for n in range(n_from, n_to + 1):
        jobs.extend(GameJob(name, n) for name in strategies)
        jobs.extend(
            GameJob(STRATEGY_RANDOM, n, master_seed + j) for j in range(random_seeds)
        )
    records = await GameBatchCoordinator(threads).async_run(jobs)

    summary = VerifySummary(n_from, n_to, tuple(strategies), random_seeds)
    summary.games = len(records)
    totals: dict[tuple[int, str], int] = {}
    for record in records:
        for check in record.report.failures:
            summary.failures.append(
                VerifyFailure(record.n, record.strategy, record.seed, check.name)
            )
        if record.strategy in SHORTEST_GAME_STRATEGIES:
            if record.splits:
                summary.failures.append(
                    VerifyFailure(record.n, record.strategy, None, "zero_splits")
                )
            if record.total_moves != record.n - zeckendorf(record.n).z:
                summary.failures.append(
                    VerifyFailure(record.n, record.strategy, None, "shortest_game")
                )
        totals[record.n, record.strategy] = record.total_moves

    for n in range(n_from, n_to + 1):
        split_smallest = totals.get((n, STRATEGY_SPLIT_SMALLEST))
        ones_first = totals.get((n, STRATEGY_ONES_FIRST_SPLIT_SMALLEST))
        if split_smallest is None or ones_first is None:
            continue
        summary.conjecture_checked += 1
        if split_smallest != ones_first:
            summary.conjecture_mismatches.append(n)
            _LOGGER.warning(
                "Conjecture mismatch on n=%d: split-smallest %d, ones-first %d",
                n,
                split_smallest,
                ones_first,
            )

    if summary.passed:
        _LOGGER.info("Verified %d games on n=%d..%d", summary.games, n_from, n_to)
    else:
        _LOGGER.error(
            "%d failed check(s) over %d games", len(summary.failures), summary.games
        )
    return summary
