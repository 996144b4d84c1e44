"""Property-based tests of the engine and the move-count identities."""

from hypothesis import given, settings, strategies as st

from zeckendorf_game.const import DETERMINISTIC_STRATEGIES, STRATEGY_RANDOM
from zeckendorf_game.engine import (
    MoveTally,
    apply_move,
    index_sum_delta,
    initial_state,
    is_terminal,
    legal_moves,
    progress_measure,
)
from zeckendorf_game.fibcore import build_fib_table, move_bounds, zeckendorf
from zeckendorf_game.strategies import get_strategy, play_out

n_values = st.integers(min_value=3, max_value=2000)
seeds = st.integers(min_value=0, max_value=2**64 - 1)


@given(st.integers(min_value=1, max_value=10**15))
def test_decomposition_properties(n):
    """Test that decompositions sum to n with non-adjacent indices."""
    decomposition = zeckendorf(n)
    assert sum(decomposition.values) == n
    indices = decomposition.indices
    assert all(b - a >= 2 for a, b in zip(indices, indices[1:]))
    assert decomposition.indices[-1] == build_fib_table(n).i_max


@given(n_values, seeds)
@settings(max_examples=60)
def test_random_play_out_keeps_every_invariant(n, seed):
    """Test conservation, both monovariants and the progress measure per move."""
    strategy = get_strategy(STRATEGY_RANDOM, seed)
    state = initial_state(n)
    tally = MoveTally.for_table(state.table)
    while moves := legal_moves(state):
        move = strategy.select_move(state)
        assert move in moves
        after = apply_move(state, move, tally)
        assert after.value == n
        assert after.counts[-1] == 0
        assert state.term_count - after.term_count == (1 if move.is_combining else 0)
        assert state.index_sum - after.index_sum == index_sum_delta(move)
        assert progress_measure(after) < progress_measure(state)
        state = after

    assert is_terminal(state)
    assert state.indices() == zeckendorf(n).indices


@given(n_values, seeds)
@settings(max_examples=200)
def test_random_games_satisfy_identities(n, seed):
    """Test that every random game satisfies every tally identity."""
    record = play_out(get_strategy(STRATEGY_RANDOM, seed), n)
    lower, upper = move_bounds(n)
    assert record.report.passed
    assert lower <= record.total_moves <= upper


@given(st.sampled_from(DETERMINISTIC_STRATEGIES), n_values)
@settings(max_examples=200)
def test_deterministic_games_satisfy_identities(name, n):
    """Test that every deterministic game satisfies every tally identity."""
    record = play_out(get_strategy(name), n)
    assert record.report.passed
