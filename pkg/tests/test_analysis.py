"""Test exhaustive enumeration and solving of small games."""

import pytest

from zeckendorf_game.analysis import (
    GameGraph,
    brute_force_winner,
    deterministic_winner_table,
    enumerate_games,
    solve_winner,
)
from zeckendorf_game.const import (
    STRATEGY_COMBINE_LARGEST,
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST,
    STRATEGY_RANDOM,
    STRATEGY_SPLIT_SMALLEST,
)
from zeckendorf_game.engine import Player, winner_by_parity
from zeckendorf_game.exceptions import CapExceededError, DomainError
from zeckendorf_game.fibcore import move_bounds, zeckendorf
from zeckendorf_game.strategies import get_strategy, play_out


class TestGameGraph:
    """Test exploration of the reachable states."""

    def test_children_before_parents(self):
        """Test that the exploration order is a reverse topological order."""
        graph = GameGraph(12).explore()
        position = {key: i for i, key in enumerate(graph.order)}
        assert len(position) == len(graph.successors)
        for key, children in graph.successors.items():
            assert all(position[child] < position[key] for child in children)
        assert graph.order[-1] == graph.root

    def test_explore_twice(self):
        """Test that a second explore does no extra work."""
        graph = GameGraph(6).explore()
        order = list(graph.order)
        assert graph.explore().order == order

    def test_cap(self):
        """Test that the state cap is enforced and reported."""
        with pytest.raises(CapExceededError) as err:
            GameGraph(20, state_cap=5).explore()
        assert err.value.states_visited == 5
        assert err.value.state_cap == 5
        assert "visited 5 states" in str(err.value)

    def test_invalid_cap(self):
        """Test that a non-positive cap is rejected."""
        with pytest.raises(DomainError):
            GameGraph(4, state_cap=0)


class TestEnumerate:
    """Test longest, shortest and number of games."""

    def test_four(self):
        """Test the two games on 4."""
        stats = enumerate_games(4)
        assert stats.longest_game == 3
        assert stats.shortest_game == 2
        assert stats.distinct_games == 2
        assert stats.reachable_states == 4
        assert not stats.distinct_games_overflow

    def test_one(self):
        """Test that the game on 1 is empty."""
        stats = enumerate_games(1)
        assert (stats.longest_game, stats.shortest_game) == (0, 0)
        assert stats.distinct_games == 1

    def test_three(self):
        """Test the single forced game on 3."""
        stats = enumerate_games(3)
        assert (stats.longest_game, stats.shortest_game) == (2, 2)
        assert stats.distinct_games == 1

    def test_to_dict(self):
        """Test the JSON-ready form."""
        data = enumerate_games(4).to_dict()
        assert data["n"] == 4
        assert data["longest"] == 3
        assert data["shortest"] == 2

    @pytest.mark.parametrize("n", range(2, 16))
    def test_extremes_match_strategies(self, n):
        """Test that the extremes are realized by known strategies."""
        stats = enumerate_games(n)
        lower, upper = move_bounds(n)
        assert stats.shortest_game == lower == n - zeckendorf(n).z
        assert stats.longest_game <= upper
        assert (
            stats.longest_game
            == play_out(get_strategy(STRATEGY_SPLIT_SMALLEST), n).total_moves
        )
        assert (
            stats.longest_game
            == play_out(get_strategy(STRATEGY_ONES_FIRST_SPLIT_SMALLEST), n).total_moves
        )

    def test_cap_exceeded(self):
        """Test that enumeration past the cap raises."""
        with pytest.raises(CapExceededError):
            enumerate_games(30, state_cap=20)


class TestSolve:
    """Test the winner under optimal play."""

    @pytest.mark.parametrize(
        ("n", "winner"),
        [(1, None), (2, Player.ONE), (3, Player.TWO), (4, Player.TWO), (9, Player.TWO)],
    )
    def test_known_winners(self, n, winner):
        """Test hand-checked winners."""
        result = solve_winner(n)
        assert result.winner is winner
        assert result.n == n

    @pytest.mark.parametrize("n", range(1, 9))
    def test_agrees_with_brute_force(self, n):
        """Test that the memoized solver matches plain minimax."""
        assert solve_winner(n).winner is brute_force_winner(n)

    def test_player_two_wins_beyond_two(self):
        """Test that Player Two wins every game from 3 on."""
        for n in range(3, 13):
            assert solve_winner(n).winner is Player.TWO

    def test_to_dict(self):
        """Test the JSON-ready form."""
        assert solve_winner(4).to_dict() == {
            "n": 4,
            "winner": "two",
            "solved_states": 4,
        }


class TestDeterministicWinners:
    """Test the winner table for deterministic games."""

    def test_table(self):
        """Test lengths and winners of Combine Largest games."""
        rows = deterministic_winner_table(3, 8, [STRATEGY_COMBINE_LARGEST])
        assert [row.n for row in rows] == [3, 4, 5, 6, 7, 8]
        for row in rows:
            assert row.total_moves == row.n - zeckendorf(row.n).z
            assert row.winner is winner_by_parity(row.total_moves)

    def test_rejects_random(self):
        """Test that a random strategy has no fixed winner."""
        with pytest.raises(DomainError):
            deterministic_winner_table(3, 4, [STRATEGY_RANDOM])
