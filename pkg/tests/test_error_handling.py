"""Test error handling and edge cases across the toolkit."""

import pytest

from zeckendorf_game.engine import (
    Move,
    MoveTally,
    apply_move,
    decode_state,
    initial_state,
)
from zeckendorf_game.exceptions import (
    BatchFailed,
    CapExceededError,
    DegenerateDistributionError,
    DomainError,
    EngineInvariantError,
    IllegalMoveError,
    InvalidConfig,
    TerminalStateError,
    TooFewGamesError,
    ZeckendorfError,
)
from zeckendorf_game.stats import standardize
from zeckendorf_game.strategies import get_strategy, play_out


class TestErrorHandling:
    """Test error handling across the toolkit."""

    @pytest.mark.parametrize(
        "error",
        [
            DomainError,
            IllegalMoveError,
            EngineInvariantError,
            TerminalStateError,
            TooFewGamesError,
            DegenerateDistributionError,
            BatchFailed,
            InvalidConfig,
        ],
    )
    def test_hierarchy(self, error):
        """Test that every error derives from the package base error."""
        assert issubclass(error, ZeckendorfError)

    def test_domain_error_is_value_error(self):
        """Test that domain errors can be caught as ValueError."""
        with pytest.raises(ValueError):
            initial_state(0)

    def test_cap_exceeded_carries_counts(self):
        """Test the cap error's attributes and message."""
        err = CapExceededError(1000, 999)
        assert err.states_visited == 1000
        assert err.state_cap == 999
        assert str(err) == "State cap exceeded: visited 1000 states (cap 999)"
        assert isinstance(err, ZeckendorfError)

    def test_negative_n(self):
        """Test that a game on a negative number is refused."""
        with pytest.raises(DomainError):
            play_out(get_strategy("greedy"), -4)

    def test_move_on_terminal_state(self):
        """Test that no move applies to a finished game."""
        state = decode_state("1^1,3^1")
        tally = MoveTally.for_table(state.table)
        for move in (Move.add_ones(), Move.combine(2), Move.split_twos()):
            with pytest.raises(IllegalMoveError):
                apply_move(state, move, tally)

    def test_terminal_select(self):
        """Test selecting a move after the game ended."""
        with pytest.raises(TerminalStateError):
            get_strategy("random", 1).select_move(initial_state(1))

    def test_standardize_constant(self):
        """Test that a constant sample cannot be standardized."""
        with pytest.raises(DegenerateDistributionError):
            standardize([2, 2, 2, 2])
