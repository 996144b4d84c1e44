"""Unit tests for GameBatchCoordinator."""

from unittest.mock import patch

import pytest

from zeckendorf_game.const import STRATEGY_RANDOM, STRATEGY_SPLIT_SMALLEST
from zeckendorf_game.coordinator import GameBatchCoordinator, GameJob, run_job
from zeckendorf_game.exceptions import BatchFailed, DomainError


def _random_jobs(n, count, master_seed=0):
    return [GameJob(STRATEGY_RANDOM, n, master_seed + i) for i in range(count)]


class TestGameBatchCoordinator:
    """Unit tests for GameBatchCoordinator class."""

    def test_initialization(self):
        """Test coordinator initialization."""
        assert GameBatchCoordinator().threads == 1
        assert GameBatchCoordinator(4).threads == 4

    def test_rejects_zero_workers(self):
        """Test that at least one worker is required."""
        with pytest.raises(DomainError):
            GameBatchCoordinator(0)

    def test_chunks_cover_every_job_in_order(self):
        """Test that chunking keeps every job exactly once, in order."""
        jobs = _random_jobs(10, 37)
        chunks = GameBatchCoordinator(3)._chunks(jobs)
        assert [job for chunk in chunks for job in chunk] == jobs
        assert len(chunks) <= 12

    async def test_empty_batch(self):
        """Test that no jobs give no records."""
        assert await GameBatchCoordinator().async_run([]) == []

    async def test_inline_run(self):
        """Test the single-worker path."""
        jobs = _random_jobs(50, 5, master_seed=10)
        records = await GameBatchCoordinator(1).async_run(jobs)
        assert [record.seed for record in records] == [10, 11, 12, 13, 14]
        assert records == [run_job(job) for job in jobs]

    async def test_worker_count_does_not_change_results(self):
        """Test that a process pool returns the same records in job order."""
        jobs = _random_jobs(60, 24)
        inline = await GameBatchCoordinator(1).async_run(jobs)
        pooled = await GameBatchCoordinator(3).async_run(jobs)
        assert pooled == inline

    async def test_failure_is_wrapped(self):
        """Test that a failing play-out surfaces as BatchFailed."""
        with patch(
            "zeckendorf_game.coordinator.play_out", side_effect=RuntimeError("boom")
        ):
            with pytest.raises(BatchFailed) as err:
                await GameBatchCoordinator(1).async_run([GameJob(STRATEGY_RANDOM, 5)])
        assert isinstance(err.value.__cause__, RuntimeError)

    async def test_invalid_job_is_wrapped(self):
        """Test that a bad job inside a batch surfaces as BatchFailed."""
        with pytest.raises(BatchFailed):
            await GameBatchCoordinator(1).async_run(
                [GameJob(STRATEGY_SPLIT_SMALLEST, 0)]
            )

    def test_sync_run(self):
        """Test running a batch from synchronous code."""
        records = GameBatchCoordinator().run(_random_jobs(20, 3))
        assert len(records) == 3
        assert all(record.report.passed for record in records)
