"""Test identity verification over ranges of n."""

from unittest.mock import patch

import pytest

from zeckendorf_game.const import (
    DETERMINISTIC_STRATEGIES,
    STRATEGY_COMBINE_LARGEST,
    STRATEGY_SPLIT_SMALLEST,
)
from zeckendorf_game.engine import MoveTally, verify_tally
from zeckendorf_game.exceptions import DomainError
from zeckendorf_game.strategies import GameRecord, play_out as real_play_out
from zeckendorf_game.verify import async_verify_range


class TestVerifyRange:
    """Test the range verifier."""

    async def test_all_strategies_pass(self):
        """Test every deterministic strategy and some random games on 3..120."""
        summary = await async_verify_range(
            3, 120, DETERMINISTIC_STRATEGIES, random_seeds=3
        )
        assert summary.passed
        assert summary.games == 118 * (len(DETERMINISTIC_STRATEGIES) + 3)
        assert summary.conjecture_checked == 118

    async def test_summary_dict(self):
        """Test the JSON-ready summary."""
        summary = await async_verify_range(3, 10, [STRATEGY_COMBINE_LARGEST])
        data = summary.to_dict()
        assert data["from"] == 3
        assert data["to"] == 10
        assert data["passed"] is True
        assert data["failures"] == []
        assert data["conjecture"]["split_smallest_equals_ones_first"]["checked"] == 0

    async def test_invalid_range(self):
        """Test that an empty range is rejected."""
        with pytest.raises(DomainError):
            await async_verify_range(10, 3, DETERMINISTIC_STRATEGIES)

    async def test_failures_are_collected(self):
        """Test that a broken tally is reported as data, not raised."""

        def broken_play_out(strategy, n, strict=False):
            record = real_play_out(strategy, n, strict)
            tally = MoveTally(mc=list(record.tally.mc), ms=list(record.tally.ms))
            tally.mc[1] += 1
            return GameRecord(
                strategy=record.strategy,
                n=record.n,
                seed=record.seed,
                total_moves=record.total_moves,
                splits=record.splits,
                tally=tally,
                report=verify_tally(n, tally),
                final_state=record.final_state,
                winner=record.winner,
            )

        with patch("zeckendorf_game.coordinator.play_out", side_effect=broken_play_out):
            summary = await async_verify_range(5, 6, [STRATEGY_SPLIT_SMALLEST])

        assert not summary.passed
        assert {failure.n for failure in summary.failures} == {5, 6}
        assert "combining_moves" in {failure.check for failure in summary.failures}
