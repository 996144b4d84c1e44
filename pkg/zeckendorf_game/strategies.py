"""Move-selection strategies and the play-out driver."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from dataclasses import dataclass
import logging
from typing import Any

from .const import (
    DEFAULT_SEED,
    STRATEGY_COMBINE_LARGEST,
    STRATEGY_COMBINE_SMALLEST,
    STRATEGY_GREEDY,
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST,
    STRATEGY_RANDOM,
    STRATEGY_SPLIT_LARGEST,
    STRATEGY_SPLIT_SMALLEST,
)
from .engine import (
    GameState,
    Move,
    MoveTally,
    Player,
    VerificationReport,
    apply_in_place,
    apply_move,
    encode_state,
    initial_state,
    is_terminal,
    legal_moves,
    legal_moves_from_counts,
    verify_tally,
    winner_by_parity,
)
from .exceptions import DomainError, EngineInvariantError, TerminalStateError
from .fibcore import zeckendorf
from .rng import SplitMix64

_LOGGER = logging.getLogger(__name__)

Scanner = Callable[[list[int]], Move | None]


def _split_at(k: int) -> Move:
    return Move.split_twos() if k == 2 else Move.split(k)


def _add_ones(c: list[int]) -> Move | None:
    return Move.add_ones() if c[1] >= 2 else None


def _combine_descending(c: list[int]) -> Move | None:
    for k in range(len(c) - 1, 1, -1):
        if c[k] and c[k - 1]:
            return Move.combine(k)
    return None


def _combine_ascending(c: list[int]) -> Move | None:
    for k in range(2, len(c)):
        if c[k - 1] and c[k]:
            return Move.combine(k)
    return None


def _split_descending(c: list[int]) -> Move | None:
    for k in range(len(c) - 1, 1, -1):
        if c[k] >= 2:
            return _split_at(k)
    return None


def _split_ascending(c: list[int]) -> Move | None:
    for k in range(2, len(c)):
        if c[k] >= 2:
            return _split_at(k)
    return None


class Strategy(ABC):
    """Base class for move-selection policies."""

    name: str
    seed: int | None = None
    deterministic: bool = True

    def reset(self) -> None:
        """Prepare for a fresh play-out."""

    @abstractmethod
    def choose(self, counts: list[int]) -> Move | None:
        """Return the chosen move for a raw count array, or None if terminal."""

    def select_move(self, state: GameState) -> Move:
        """Return the chosen move for a non-terminal state."""
        move = self.choose(state.counts)
        if move is None:
            raise TerminalStateError(
                f"No move for {self.name}: {encode_state(state)} is terminal"
            )
        return move

    def __repr__(self) -> str:
        """Return the strategy name."""
        return f"{type(self).__name__}({self.name!r})"


class PriorityStrategy(Strategy):
    """Take the first legal move from a fixed sequence of move-class scans."""

    def __init__(self, name: str, scanners: Sequence[Scanner]) -> None:
        """Initialize the strategy."""
        self.name = name
        self._scanners = tuple(scanners)

    def choose(self, counts: list[int]) -> Move | None:
        """Return the first move any scanner finds."""
        for scanner in self._scanners:
            move = scanner(counts)
            if move is not None:
                return move
        return None


class GreedyStrategy(Strategy):
    """Move on the largest index possible, combining before splitting."""

    name = STRATEGY_GREEDY

    def choose(self, counts: list[int]) -> Move | None:
        """Return the legal move whose largest read index is maximal."""
        for k in range(len(counts) - 1, 0, -1):
            if k >= 2 and counts[k] and counts[k - 1]:
                return Move.combine(k)
            if counts[k] >= 2:
                return Move.add_ones() if k == 1 else _split_at(k)
        return None


class RandomStrategy(Strategy):
    """Pick uniformly among the legal moves with a seeded generator."""

    name = STRATEGY_RANDOM
    deterministic = False

    def __init__(self, seed: int = DEFAULT_SEED) -> None:
        """Initialize the strategy."""
        self.seed = seed
        self._rng = SplitMix64(seed)

    def reset(self) -> None:
        """Restart the generator from the seed."""
        self._rng = SplitMix64(self.seed)

    def choose(self, counts: list[int]) -> Move | None:
        """Return a uniformly drawn legal move."""
        moves = legal_moves_from_counts(counts)
        if not moves:
            return None
        return moves[self._rng.below(len(moves))]

    def __repr__(self) -> str:
        """Return the strategy name and seed."""
        return f"RandomStrategy(seed={self.seed})"


_PRIORITIES: dict[str, tuple[Scanner, ...]] = {
    STRATEGY_COMBINE_LARGEST: (_combine_descending, _add_ones, _split_descending),
    STRATEGY_SPLIT_LARGEST: (_split_descending, _combine_descending, _add_ones),
    STRATEGY_COMBINE_SMALLEST: (_add_ones, _combine_ascending, _split_ascending),
    STRATEGY_SPLIT_SMALLEST: (_split_ascending, _add_ones, _combine_ascending),
    STRATEGY_ONES_FIRST_SPLIT_SMALLEST: (
        _add_ones,
        _split_ascending,
        _combine_ascending,
    ),
}


def get_strategy(name: str, seed: int | None = None) -> Strategy:
    """Return a strategy by its command-line name."""
    if name in _PRIORITIES:
        return PriorityStrategy(name, _PRIORITIES[name])
    if name == STRATEGY_GREEDY:
        return GreedyStrategy()
    if name == STRATEGY_RANDOM:
        return RandomStrategy(DEFAULT_SEED if seed is None else seed)
    raise DomainError(f"Unknown strategy {name!r}")


def select_move(strategy: Strategy, state: GameState) -> Move:
    """Return the strategy's move in a non-terminal state."""
    return strategy.select_move(state)


@dataclass(frozen=True, slots=True)
class GameRecord:
    """Result of one complete play-out."""

    strategy: str
    n: int
    seed: int | None
    total_moves: int
    splits: int
    tally: MoveTally
    report: VerificationReport
    final_state: str
    winner: Player | None

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "strategy": self.strategy,
            "n": self.n,
            "seed": self.seed,
            "total_moves": self.total_moves,
            "splits": self.splits,
            "tally": self.tally.to_dict(),
            "identities": self.report.to_dict(),
            "final_state": self.final_state,
            "winner": None if self.winner is None else str(self.winner),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GameRecord:
        """Rebuild a record from its dictionary form."""
        return cls(
            strategy=data["strategy"],
            n=data["n"],
            seed=data["seed"],
            total_moves=data["total_moves"],
            splits=data["splits"],
            tally=MoveTally.from_dict(data["tally"]),
            report=VerificationReport.from_dict(data["identities"]),
            final_state=data["final_state"],
            winner=None if data["winner"] is None else Player(data["winner"]),
        )


def _play_checked(strategy: Strategy, state: GameState, tally: MoveTally) -> GameState:
    """Play to the end, checking every invariant after every move."""
    while True:
        moves = legal_moves(state)
        if bool(moves) == is_terminal(state):
            raise EngineInvariantError(
                f"Terminal test disagrees with move generation at {encode_state(state)}"
            )
        if not moves:
            return state
        move = strategy.select_move(state)
        if move not in moves:
            raise EngineInvariantError(f"{strategy!r} chose illegal {move}")
        state = apply_move(state, move, tally)


def play_out(strategy: Strategy, n: int, strict: bool = False) -> GameRecord:
    """Play a complete game on n under the strategy.

    strict=True checks conservation, both monovariants and the progress
    measure after every move; the default path only checks the outcome.
    """
    state = initial_state(n)
    tally = MoveTally.for_table(state.table)
    strategy.reset()
    _LOGGER.debug("Starting %r play-out on n=%d (strict=%s)", strategy, n, strict)

    if strict:
        state = _play_checked(strategy, state, tally)
    else:
        counts = state.counts
        choose = strategy.choose
        record = tally.record
        while (move := choose(counts)) is not None:
            apply_in_place(counts, move)
            record(move)

    expected = zeckendorf(n)
    if not is_terminal(state) or state.indices() != expected.indices:
        raise EngineInvariantError(
            f"Game on n={n} ended at {encode_state(state)}, "
            f"expected indices {expected.indices}"
        )

    report = verify_tally(n, tally)
    total = tally.total_moves
    result = GameRecord(
        strategy=strategy.name,
        n=n,
        seed=strategy.seed,
        total_moves=total,
        splits=tally.splitting_moves,
        tally=tally,
        report=report,
        final_state=encode_state(state),
        winner=winner_by_parity(total),
    )
    _LOGGER.debug(
        "Finished %r on n=%d: %d moves, %d splits", strategy, n, total, result.splits
    )
    return result
