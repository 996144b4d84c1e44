#!/usr/bin/env python3
"""Debug script to trace a single game move by move."""

import argparse
import logging

from zeckendorf_game.const import STRATEGY_NAMES, STRATEGY_SPLIT_SMALLEST
from zeckendorf_game.engine import (
    MoveTally,
    apply_move,
    encode_state,
    initial_state,
    is_terminal,
    progress_measure,
    verify_tally,
)
from zeckendorf_game.fibcore import move_bounds, zeckendorf
from zeckendorf_game.strategies import get_strategy

# Set up logging
logging.basicConfig(
    level=logging.DEBUG, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)


def trace_game(n: int, strategy_name: str, seed: int) -> None:
    """Play one game on n and print every position."""
    decomposition = zeckendorf(n)
    lower, upper = move_bounds(n)
    print(f"\nTracing {strategy_name} on n={n} (seed {seed})")
    print(f"Target indices: {list(decomposition.indices)}")
    print(f"Move bounds: {lower} .. {upper}")

    strategy = get_strategy(strategy_name, seed)
    strategy.reset()
    state = initial_state(n)
    tally = MoveTally.for_table(state.table)

    step = 0
    while not is_terminal(state):
        move = strategy.select_move(state)
        state = apply_move(state, move, tally)
        step += 1
        measure = progress_measure(state)
        print(f"{step:4d}  {move!s:<12} {encode_state(state):<40} {measure}")

    print(f"\nFinished after {tally.total_moves} moves")
    print(f"Combining: {tally.combining_moves}, splitting: {tally.splitting_moves}")
    report = verify_tally(n, tally)
    for check in report.checks:
        mark = "ok" if check.passed else "FAILED"
        relation = f"{check.lhs} {check.relation} {check.rhs}"
        print(f"   ({check.label}) {check.name}: {relation} {mark}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int)
    parser.add_argument(
        "--strategy", choices=STRATEGY_NAMES, default=STRATEGY_SPLIT_SMALLEST
    )
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    trace_game(args.n, args.strategy, args.seed)
