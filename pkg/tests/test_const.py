"""Test constants and configuration values."""

import math

from zeckendorf_game.const import (
    DEFAULT_GROWTH_CONSTANTS,
    DEFAULT_RANDOM_SEEDS_PER_N,
    DEFAULT_SEED,
    DEFAULT_STATE_CAP,
    DEFAULT_THREADS,
    DETERMINISTIC_STRATEGIES,
    DOMAIN,
    OUTPUT_FORMATS,
    PHI,
    PHI_SQUARED,
    SCHEMA_VERSION,
    SHORTEST_GAME_STRATEGIES,
    STANDARDIZED_BIN_WIDTH,
    STANDARDIZED_RANGE,
    STRATEGY_NAMES,
    STRATEGY_RANDOM,
)


def test_domain_constant():
    """Test that domain constant matches the package name."""
    assert DOMAIN == "zeckendorf_game"


def test_strategy_names():
    """Test the command-line strategy names."""
    assert STRATEGY_NAMES == (
        "combine-largest",
        "split-largest",
        "combine-smallest",
        "split-smallest",
        "ones-first-split-smallest",
        "greedy",
        "random",
    )
    assert STRATEGY_RANDOM not in DETERMINISTIC_STRATEGIES
    assert set(SHORTEST_GAME_STRATEGIES) <= set(DETERMINISTIC_STRATEGIES)


def test_default_values():
    """Test default configuration values."""
    assert DEFAULT_SEED == 0
    assert DEFAULT_THREADS == 1
    assert DEFAULT_STATE_CAP == 10_000_000
    assert DEFAULT_RANDOM_SEEDS_PER_N == 10
    assert SCHEMA_VERSION == 1
    assert OUTPUT_FORMATS == ("json", "csv")


def test_growth_constants_cover_every_deterministic_strategy():
    """Test that every deterministic strategy has a default growth constant."""
    assert set(DEFAULT_GROWTH_CONSTANTS) == set(DETERMINISTIC_STRATEGIES)
    assert DEFAULT_GROWTH_CONSTANTS["split-smallest"] == PHI_SQUARED
    assert DEFAULT_GROWTH_CONSTANTS["combine-smallest"] == 1.20647
    assert DEFAULT_GROWTH_CONSTANTS["greedy"] == 1.0


def test_golden_mean():
    """Test the golden mean constants."""
    assert math.isclose(PHI_SQUARED, PHI + 1)
    assert math.isclose(PHI, 1.618033988749895)


def test_standardized_histogram_geometry():
    """Test that the standardized range divides into whole bins."""
    low, high = STANDARDIZED_RANGE
    assert (high - low) / STANDARDIZED_BIN_WIDTH == 40
