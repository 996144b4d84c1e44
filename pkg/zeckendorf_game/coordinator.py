"""Batch coordinator for independent play-outs."""

from __future__ import annotations

import asyncio
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import logging

from .const import DEFAULT_THREADS
from .exceptions import BatchFailed, DomainError
from .strategies import GameRecord, get_strategy, play_out

_LOGGER = logging.getLogger(__name__)

# chunks handed to each worker over the life of a batch
CHUNKS_PER_WORKER = 4


@dataclass(frozen=True, slots=True)
class GameJob:
    """One play-out to run: a strategy name, n and an optional seed."""

    strategy: str
    n: int
    seed: int | None = None
    strict: bool = False


def run_job(job: GameJob) -> GameRecord:
    """Play one job to completion."""
    return play_out(get_strategy(job.strategy, job.seed), job.n, strict=job.strict)


def run_chunk(jobs: Sequence[GameJob]) -> list[GameRecord]:
    """Play a contiguous run of jobs in order."""
    return [run_job(job) for job in jobs]


class GameBatchCoordinator:
    """Class to manage running play-out jobs across worker processes.

    Results always come back in job order, so anything computed from them
    is independent of the worker count. threads=1 runs every job inline.
    """

    def __init__(self, threads: int = DEFAULT_THREADS) -> None:
        """Initialize the coordinator."""
        if threads < 1:
            raise DomainError(f"Worker count must be at least 1, got {threads}")
        self.threads = threads
        _LOGGER.debug("Coordinator initialized with %d worker(s)", threads)

    def _chunks(self, jobs: Sequence[GameJob]) -> list[Sequence[GameJob]]:
        """Split jobs into contiguous chunks."""
        count = max(1, min(len(jobs), self.threads * CHUNKS_PER_WORKER))
        size = -(-len(jobs) // count)
        return [jobs[i : i + size] for i in range(0, len(jobs), size)]

    async def async_run(self, jobs: Sequence[GameJob]) -> list[GameRecord]:
        """Run every job and return the records in job order."""
        _LOGGER.debug("Starting batch of %d job(s)", len(jobs))
        if not jobs:
            return []

        try:
            if self.threads == 1:
                records = run_chunk(jobs)
            else:
                loop = asyncio.get_running_loop()
                chunks = self._chunks(jobs)
                _LOGGER.debug(
                    "Dispatching %d chunk(s) to %d worker(s)", len(chunks), self.threads
                )
                with ProcessPoolExecutor(max_workers=self.threads) as executor:
                    results = await asyncio.gather(
                        *(
                            loop.run_in_executor(executor, run_chunk, chunk)
                            for chunk in chunks
                        )
                    )
                records = [record for chunk in results for record in chunk]
        except Exception as err:
            _LOGGER.error("Error running play-outs: %s", err)
            raise BatchFailed(f"Error running play-outs: {err}") from err

        _LOGGER.info("Batch of %d play-out(s) completed", len(records))
        return records

    def run(self, jobs: Sequence[GameJob]) -> list[GameRecord]:
        """Run every job from synchronous code."""
        return asyncio.run(self.async_run(jobs))
