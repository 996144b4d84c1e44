"""Constants for the Zeckendorf game toolkit."""

import math

DOMAIN = "zeckendorf_game"

# Output schema
SCHEMA_VERSION = 1

# Golden mean
PHI = (1 + math.sqrt(5)) / 2
PHI_SQUARED = PHI * PHI

# Largest value a table entry may take (signed 64-bit)
INT64_MAX = 2**63 - 1

# Strategy names
STRATEGY_COMBINE_LARGEST = "combine-largest"
STRATEGY_SPLIT_LARGEST = "split-largest"
STRATEGY_COMBINE_SMALLEST = "combine-smallest"
STRATEGY_SPLIT_SMALLEST = "split-smallest"
STRATEGY_ONES_FIRST_SPLIT_SMALLEST = "ones-first-split-smallest"
STRATEGY_GREEDY = "greedy"
STRATEGY_RANDOM = "random"

DETERMINISTIC_STRATEGIES = (
    STRATEGY_COMBINE_LARGEST,
    STRATEGY_SPLIT_LARGEST,
    STRATEGY_COMBINE_SMALLEST,
    STRATEGY_SPLIT_SMALLEST,
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST,
    STRATEGY_GREEDY,
)
STRATEGY_NAMES = (*DETERMINISTIC_STRATEGIES, STRATEGY_RANDOM)

# Strategies whose play-outs never split
SHORTEST_GAME_STRATEGIES = (
    STRATEGY_COMBINE_LARGEST,
    STRATEGY_SPLIT_LARGEST,
    STRATEGY_GREEDY,
)

# Default values
DEFAULT_SEED = 0
DEFAULT_STATE_CAP = 10_000_000
DEFAULT_THREADS = 1
DEFAULT_RANDOM_SEEDS_PER_N = 10
DEFAULT_OUTPUT_FORMAT = "json"
OUTPUT_FORMATS = ("json", "csv")

# Growth constants (total moves ~ c * n)
COMBINE_SMALLEST_CONSTANT = 1.20647
DEFAULT_GROWTH_CONSTANTS = {
    STRATEGY_COMBINE_LARGEST: 1.0,
    STRATEGY_SPLIT_LARGEST: 1.0,
    STRATEGY_GREEDY: 1.0,
    STRATEGY_COMBINE_SMALLEST: COMBINE_SMALLEST_CONSTANT,
    STRATEGY_SPLIT_SMALLEST: PHI_SQUARED,
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST: PHI_SQUARED,
}

# Conjecture-level tolerances
GROWTH_RELATIVE_TOLERANCE = 0.01
SPLITS_MEAN_FRACTION_WINDOW = (0.20, 0.23)
SKEWNESS_TOLERANCE = 0.1
EXCESS_KURTOSIS_TOLERANCE = 0.3
KS_CRITICAL_COEFFICIENT_1PCT = 1.63

# Normality report
MIN_NORMALITY_GAMES = 1000

# Standardized histogram geometry
STANDARDIZED_BIN_WIDTH = 0.25
STANDARDIZED_RANGE = (-5.0, 5.0)

# Saturation point for game counting
GAME_COUNT_LIMIT = 2**63 - 1
