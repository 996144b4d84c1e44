"""Test configuration for the Zeckendorf game toolkit."""

from hypothesis import HealthCheck, settings
import pytest

from zeckendorf_game.engine import GameState, MoveTally, decode_state, initial_state

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def four() -> GameState:
    """Starting position of the game on 4."""
    return initial_state(4)


@pytest.fixture
def ones_and_a_two() -> GameState:
    """The position {F_1^2, F_2^1} reached after the first move on 4."""
    return decode_state("1^2,2^1")


@pytest.fixture
def split_smallest_tally_on_four() -> MoveTally:
    """Tally of the forced Split Smallest game on 4: two AddOnes, one SplitTwos."""
    return MoveTally(mc=[0, 2, 0, 0, 0], ms=[0, 0, 1, 0, 0])
