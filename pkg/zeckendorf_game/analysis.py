"""Exhaustive analysis of the game graph for small n.

Every reachable position is explored once; longest and shortest games,
the number of distinct games and the winner under optimal play are then
computed by dynamic programming over the finished graph, each with its own
memo table.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import logging
from typing import Any

from .const import DEFAULT_STATE_CAP, DETERMINISTIC_STRATEGIES, GAME_COUNT_LIMIT
from .engine import (
    Player,
    apply_in_place,
    initial_state,
    legal_moves_from_counts,
    winner_by_parity,
)
from .exceptions import CapExceededError, DomainError, EngineInvariantError
from .strategies import get_strategy, play_out

_LOGGER = logging.getLogger(__name__)

StateKey = tuple[int, ...]


def _measure(key: StateKey) -> tuple[int, int, int]:
    """Return the progress measure of a packed state."""
    return sum(i * c for i, c in enumerate(key)), sum(key), key[2]


class GameGraph:
    """Reachable states of the game on n and the edges between them."""

    def __init__(self, n: int, state_cap: int = DEFAULT_STATE_CAP) -> None:
        """Initialize the graph; call explore() before reading it."""
        if state_cap < 1:
            raise DomainError(f"State cap must be positive, got {state_cap}")
        self.n = n
        self.state_cap = state_cap
        self.root: StateKey = tuple(initial_state(n).counts)
        self.successors: dict[StateKey, tuple[StateKey, ...]] = {}
        self.order: list[StateKey] = []

    def _expand(self, key: StateKey) -> tuple[StateKey, ...]:
        """Return the children of a state, checking every edge makes progress."""
        parent = list(key)
        measure = _measure(key)
        children = []
        for move in legal_moves_from_counts(parent):
            child = parent.copy()
            apply_in_place(child, move)
            child_key = tuple(child)
            if not _measure(child_key) < measure:
                raise EngineInvariantError(
                    f"{move} from {key} does not lower the progress measure"
                )
            children.append(child_key)
        return tuple(children)

    def explore(self) -> GameGraph:
        """Visit every reachable state; order lists children before parents."""
        if self.order:
            return self

        successors = self.successors
        successors[self.root] = self._expand(self.root)
        stack: list[tuple[StateKey, int]] = [(self.root, 0)]
        while stack:
            key, position = stack[-1]
            children = successors[key]
            if position < len(children):
                stack[-1] = (key, position + 1)
                child = children[position]
                if child not in successors:
                    if len(successors) >= self.state_cap:
                        raise CapExceededError(len(successors), self.state_cap)
                    successors[child] = self._expand(child)
                    stack.append((child, 0))
            else:
                stack.pop()
                self.order.append(key)

        _LOGGER.debug("Explored %d states for n=%d", len(successors), self.n)
        return self


@dataclass(frozen=True, slots=True)
class GameGraphStats:
    """Lengths and counts over every game on n."""

    n: int
    reachable_states: int
    longest_game: int
    shortest_game: int
    distinct_games: int
    distinct_games_overflow: bool

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "n": self.n,
            "longest": self.longest_game,
            "shortest": self.shortest_game,
            "reachable_states": self.reachable_states,
            "distinct_games": self.distinct_games,
            "distinct_games_overflow": self.distinct_games_overflow,
        }


@dataclass(frozen=True, slots=True)
class SolveResult:
    """Winner of the game on n under optimal play."""

    n: int
    winner: Player | None
    solved_states: int

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "n": self.n,
            "winner": None if self.winner is None else str(self.winner),
            "solved_states": self.solved_states,
        }


def enumerate_games(n: int, state_cap: int = DEFAULT_STATE_CAP) -> GameGraphStats:
    """Return the longest and shortest game lengths and the number of games."""
    graph = GameGraph(n, state_cap).explore()

    longest: dict[StateKey, int] = {}
    shortest: dict[StateKey, int] = {}
    paths: dict[StateKey, int] = {}
    overflow = False
    for key in graph.order:
        children = graph.successors[key]
        if not children:
            longest[key] = shortest[key] = 0
            paths[key] = 1
            continue
        longest[key] = 1 + max(longest[child] for child in children)
        shortest[key] = 1 + min(shortest[child] for child in children)
        total = sum(paths[child] for child in children)
        if total > GAME_COUNT_LIMIT:
            overflow = True
            total = GAME_COUNT_LIMIT
        paths[key] = total

    stats = GameGraphStats(
        n=n,
        reachable_states=len(graph.successors),
        longest_game=longest[graph.root],
        shortest_game=shortest[graph.root],
        distinct_games=paths[graph.root],
        distinct_games_overflow=overflow,
    )
    _LOGGER.info(
        "Enumerated n=%d: %d states, longest %d, shortest %d",
        n,
        stats.reachable_states,
        stats.longest_game,
        stats.shortest_game,
    )
    return stats


def solve_winner(n: int, state_cap: int = DEFAULT_STATE_CAP) -> SolveResult:
    """Return which player wins the game on n under optimal play.

    A position with no legal move is lost for the player to move, since the
    previous player completed the decomposition.
    """
    graph = GameGraph(n, state_cap).explore()

    to_move_wins: dict[StateKey, bool] = {}
    for key in graph.order:
        to_move_wins[key] = any(
            not to_move_wins[child] for child in graph.successors[key]
        )

    if not graph.successors[graph.root]:
        winner = None
    elif to_move_wins[graph.root]:
        winner = Player.ONE
    else:
        winner = Player.TWO

    result = SolveResult(n=n, winner=winner, solved_states=len(to_move_wins))
    _LOGGER.info("Solved n=%d: winner %s over %d states", n, winner, len(to_move_wins))
    return result


def _brute_force_to_move_wins(counts: list[int]) -> bool:
    for move in legal_moves_from_counts(counts):
        child = counts.copy()
        apply_in_place(child, move)
        if not _brute_force_to_move_wins(child):
            return True
    return False


def brute_force_winner(n: int) -> Player | None:
    """Return the winner by plain exhaustive minimax, without memoization."""
    counts = initial_state(n).counts
    if not legal_moves_from_counts(counts):
        return None
    return Player.ONE if _brute_force_to_move_wins(counts) else Player.TWO


@dataclass(frozen=True, slots=True)
class DeterministicWinner:
    """Length and winner of one deterministic game."""

    n: int
    strategy: str
    total_moves: int
    winner: Player | None


def deterministic_winner_table(
    n_from: int, n_to: int, strategies: Iterable[str] = DETERMINISTIC_STRATEGIES
) -> list[DeterministicWinner]:
    """Return who wins each deterministic game for every n in n_from..n_to."""
    rows = []
    names = tuple(strategies)
    for n in range(n_from, n_to + 1):
        for name in names:
            strategy = get_strategy(name)
            if not strategy.deterministic:
                raise DomainError(f"{name} is not a deterministic strategy")
            total = play_out(strategy, n).total_moves
            rows.append(DeterministicWinner(n, name, total, winner_by_parity(total)))
    return rows
