"""Batch statistics for random games and growth scans for deterministic ones."""

from __future__ import annotations

import asyncio
from dataclasses import dataclass
import logging
import math
from typing import Any

import numpy as np

from .const import (
    DEFAULT_THREADS,
    EXCESS_KURTOSIS_TOLERANCE,
    GROWTH_RELATIVE_TOLERANCE,
    KS_CRITICAL_COEFFICIENT_1PCT,
    MIN_NORMALITY_GAMES,
    SKEWNESS_TOLERANCE,
    SPLITS_MEAN_FRACTION_WINDOW,
    STANDARDIZED_BIN_WIDTH,
    STANDARDIZED_RANGE,
    STRATEGY_RANDOM,
)
from .coordinator import GameBatchCoordinator, GameJob
from .engine import Player
from .exceptions import (
    DegenerateDistributionError,
    DomainError,
    EngineInvariantError,
    TooFewGamesError,
)
from .fibcore import zeckendorf
from .strategies import Strategy

_LOGGER = logging.getLogger(__name__)

Histogram = tuple[tuple[float, int], ...]


@dataclass(frozen=True, slots=True)
class SampleMoments:
    """Mean, sample variance and standardized third and fourth moments."""

    count: int
    mean: float
    variance: float
    skewness: float | None
    excess_kurtosis: float | None


def describe(samples: Any) -> SampleMoments:
    """Return the moments of a sample using two passes over the data.

    The variance divides by count - 1; skewness and excess kurtosis are the
    population standardized moments and are None for a constant sample.
    """
    x = np.asarray(samples, dtype=np.float64)
    if x.size < 2:
        raise DomainError(f"Need at least 2 samples, got {x.size}")

    mean = float(x.mean())
    dev = x - mean
    m2 = float(np.mean(dev**2))
    variance = float(dev @ dev) / (x.size - 1)
    if m2 == 0.0:
        return SampleMoments(x.size, mean, 0.0, None, None)

    skewness = float(np.mean(dev**3)) / m2**1.5
    excess_kurtosis = float(np.mean(dev**4)) / m2**2 - 3.0
    return SampleMoments(x.size, mean, variance, skewness, excess_kurtosis)


def standardize(samples: Any) -> np.ndarray:
    """Return (x - mean) / sample standard deviation."""
    moments = describe(samples)
    if moments.variance == 0.0:
        raise DegenerateDistributionError("Cannot standardize a constant sample")
    x = np.asarray(samples, dtype=np.float64)
    return (x - moments.mean) / math.sqrt(moments.variance)


def histogram(
    samples: Any, bins: int | None = None, standardized: bool = False
) -> Histogram:
    """Return (bin_left, count) pairs whose counts sum to the sample size.

    Raw integer samples use unit-width bins over [min, max + 1) unless bins
    is given. Standardized samples use 0.25-wide bins over [-5, 5] with
    values clipped into that range.
    """
    if bins is not None and bins < 1:
        raise DomainError(f"Bin count must be at least 1, got {bins}")

    if standardized:
        low, high = STANDARDIZED_RANGE
        count = round((high - low) / STANDARDIZED_BIN_WIDTH)
        values = np.clip(standardize(samples), low, high)
        edges = np.linspace(low, high, count + 1)
    else:
        values = np.asarray(samples, dtype=np.float64)
        low, high = math.floor(values.min()), math.floor(values.max()) + 1
        edges = np.linspace(low, high, (bins or high - low) + 1)

    counts, edges = np.histogram(values, bins=edges)
    return tuple(
        (float(left), int(c)) for left, c in zip(edges[:-1], counts, strict=True)
    )


def normal_cdf(z: np.ndarray) -> np.ndarray:
    """Return the standard normal CDF, via the C library erf."""
    return np.array([0.5 * (1.0 + math.erf(v / math.sqrt(2.0))) for v in z])


def ks_statistic(z: Any) -> float:
    """Return the one-sample Kolmogorov-Smirnov distance to the standard normal."""
    ordered = np.sort(np.asarray(z, dtype=np.float64))
    size = ordered.size
    cdf = normal_cdf(ordered)
    steps = np.arange(1, size + 1) / size
    d_plus = float(np.max(steps - cdf))
    d_minus = float(np.max(cdf - (steps - 1.0 / size)))
    return max(d_plus, d_minus)


@dataclass(frozen=True, slots=True)
class GameRow:
    """Per-game line of a batch."""

    game_index: int
    seed: int
    total_moves: int
    splits: int


@dataclass(frozen=True, slots=True)
class BatchSummary:
    """Split-count statistics over a batch of random games on n."""

    n: int
    games: int
    master_seed: int
    splits_mean: float
    splits_variance: float
    skewness: float | None
    excess_kurtosis: float | None
    moves_mean: float
    histogram: Histogram
    standardized: bool
    rows: tuple[GameRow, ...]

    @property
    def splits(self) -> np.ndarray:
        """Return the split count of every game, in game order."""
        return np.array([row.splits for row in self.rows], dtype=np.int64)

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation without the per-game rows."""
        return {
            "n": self.n,
            "games": self.games,
            "master_seed": self.master_seed,
            "splits_mean": self.splits_mean,
            "splits_variance": self.splits_variance,
            "splits_mean_over_n": self.splits_mean / self.n,
            "splits_variance_over_n": self.splits_variance / self.n,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "moves_mean": self.moves_mean,
            "moves_mean_over_n": self.moves_mean / self.n,
            "standardized": self.standardized,
            "histogram": [[left, count] for left, count in self.histogram],
        }


@dataclass(frozen=True, slots=True)
class NormalityReport:
    """Shape statistics of standardized split counts against the standard normal."""

    games: int
    skewness: float
    excess_kurtosis: float
    ks_statistic: float
    ks_critical_1pct: float

    @property
    def ks_passes(self) -> bool:
        """Return True if the KS distance is below the 1% critical value."""
        return self.ks_statistic < self.ks_critical_1pct

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "games": self.games,
            "skewness": self.skewness,
            "excess_kurtosis": self.excess_kurtosis,
            "ks_statistic": self.ks_statistic,
            "ks_critical_1pct": self.ks_critical_1pct,
            "ks_passes": self.ks_passes,
        }


def normality_from_samples(samples: Any) -> NormalityReport:
    """Return the normality report of an arbitrary sample."""
    moments = describe(samples)
    if moments.count < MIN_NORMALITY_GAMES:
        raise TooFewGamesError(
            f"Need at least {MIN_NORMALITY_GAMES} games, got {moments.count}"
        )
    if moments.skewness is None or moments.excess_kurtosis is None:
        raise DegenerateDistributionError("Split counts have zero variance")

    report = NormalityReport(
        games=moments.count,
        skewness=moments.skewness,
        excess_kurtosis=moments.excess_kurtosis,
        ks_statistic=ks_statistic(standardize(samples)),
        ks_critical_1pct=KS_CRITICAL_COEFFICIENT_1PCT / math.sqrt(moments.count),
    )
    _LOGGER.debug("Normality report: %s", report)
    return report


def normality_report(summary: BatchSummary) -> NormalityReport:
    """Return the normality report of a batch's split counts."""
    return normality_from_samples(summary.splits)


async def async_run_batch(
    n: int,
    games: int,
    master_seed: int,
    bins: int | None = None,
    standardized: bool = False,
    threads: int = DEFAULT_THREADS,
) -> BatchSummary:
    """Play random games with seeds master_seed + index and summarize splits."""
    if games < 2:
        raise DomainError(f"A batch needs at least 2 games, got {games}")
    if bins is not None and bins < 1:
        raise DomainError(f"Bin count must be at least 1, got {bins}")

    combines = n - zeckendorf(n).z
    jobs = [GameJob(STRATEGY_RANDOM, n, master_seed + i) for i in range(games)]
    records = await GameBatchCoordinator(threads).async_run(jobs)

    rows = []
    for index, record in enumerate(records):
        if record.splits != record.total_moves - combines:
            raise EngineInvariantError(
                f"Game {index} on n={n}: {record.splits} splits but "
                f"{record.total_moves} moves with {combines} combines"
            )
        rows.append(
            GameRow(index, master_seed + index, record.total_moves, record.splits)
        )

    splits = np.array([row.splits for row in rows], dtype=np.int64)
    moments = describe(splits)
    summary = BatchSummary(
        n=n,
        games=games,
        master_seed=master_seed,
        splits_mean=moments.mean,
        splits_variance=moments.variance,
        skewness=moments.skewness,
        excess_kurtosis=moments.excess_kurtosis,
        moves_mean=float(np.mean([row.total_moves for row in rows])),
        histogram=histogram(splits, bins, standardized),
        standardized=standardized,
        rows=tuple(rows),
    )
    _LOGGER.info(
        "Batch on n=%d: %d games, splits mean %.3f (%.4f n), variance %.3f",
        n,
        games,
        summary.splits_mean,
        summary.splits_mean / n,
        summary.splits_variance,
    )
    return summary


def run_batch(
    n: int,
    games: int,
    master_seed: int,
    bins: int | None = None,
    standardized: bool = False,
    threads: int = DEFAULT_THREADS,
) -> BatchSummary:
    """Run a batch from synchronous code."""
    return asyncio.run(
        async_run_batch(n, games, master_seed, bins, standardized, threads)
    )


def batch_conjecture_checks(
    summary: BatchSummary, report: NormalityReport | None
) -> dict[str, bool]:
    """Return the conjecture-level checks for a batch; never raised on."""
    low, high = SPLITS_MEAN_FRACTION_WINDOW
    checks = {"splits_mean_window": low <= summary.splits_mean / summary.n <= high}
    if report is not None:
        checks["skewness"] = abs(report.skewness) < SKEWNESS_TOLERANCE
        checks["excess_kurtosis"] = (
            abs(report.excess_kurtosis) < EXCESS_KURTOSIS_TOLERANCE
        )
        checks["ks"] = report.ks_passes
    for name, passed in checks.items():
        if not passed:
            _LOGGER.warning("Conjecture mismatch on n=%d: %s", summary.n, name)
    return checks


@dataclass(frozen=True, slots=True)
class GrowthRow:
    """Total moves of one deterministic game and its residual against c * n."""

    n: int
    total_moves: int
    residual: float
    winner: Player | None


@dataclass(frozen=True, slots=True)
class GrowthSeries:
    """Deterministic game lengths over consecutive n."""

    strategy: str
    constant: float
    rows: tuple[GrowthRow, ...]

    def max_relative_residual(self) -> float:
        """Return the largest |residual| / n over all rows."""
        return max(abs(row.residual) / row.n for row in self.rows)

    def conjecture_holds(self, tolerance: float = GROWTH_RELATIVE_TOLERANCE) -> bool:
        """Return True if every row is within tolerance * n of c * n."""
        return self.max_relative_residual() <= tolerance

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "strategy": self.strategy,
            "constant": self.constant,
            "rows": [
                {
                    "n": row.n,
                    "total_moves": row.total_moves,
                    "residual": row.residual,
                    "winner": None if row.winner is None else str(row.winner),
                }
                for row in self.rows
            ],
        }


async def async_growth_scan(
    strategy: Strategy,
    n_start: int,
    n_count: int,
    c: float,
    threads: int = DEFAULT_THREADS,
) -> GrowthSeries:
    """Play a deterministic game once for each n in n_start .. n_start + n_count - 1."""
    if not strategy.deterministic:
        raise DomainError(
            f"Growth scans need a deterministic strategy, not {strategy.name}"
        )
    if n_count < 1:
        raise DomainError(f"Need at least one n, got {n_count}")
    if n_start < 1:
        raise DomainError(f"Scans start at a positive n, got {n_start}")

    jobs = [GameJob(strategy.name, n) for n in range(n_start, n_start + n_count)]
    records = await GameBatchCoordinator(threads).async_run(jobs)
    series = GrowthSeries(
        strategy=strategy.name,
        constant=c,
        rows=tuple(
            GrowthRow(
                n=record.n,
                total_moves=record.total_moves,
                residual=record.total_moves - c * record.n,
                winner=record.winner,
            )
            for record in records
        ),
    )
    _LOGGER.info(
        "Growth scan %s from n=%d (%d values): max |residual|/n = %.5f",
        strategy.name,
        n_start,
        n_count,
        series.max_relative_residual(),
    )
    return series


def growth_scan(
    strategy: Strategy,
    n_start: int,
    n_count: int,
    c: float,
    threads: int = DEFAULT_THREADS,
) -> GrowthSeries:
    """Run a growth scan from synchronous code."""
    return asyncio.run(async_growth_scan(strategy, n_start, n_count, c, threads))


def residual_histogram(series: GrowthSeries, bins: int = 20) -> Histogram:
    """Return a histogram of the residuals of a growth scan."""
    if bins < 1:
        raise DomainError(f"Bin count must be at least 1, got {bins}")
    residuals = np.array([row.residual for row in series.rows], dtype=np.float64)
    counts, edges = np.histogram(residuals, bins=bins)
    return tuple(
        (float(left), int(c)) for left, c in zip(edges[:-1], counts, strict=True)
    )
