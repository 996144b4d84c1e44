"""Game engine for the two-player Zeckendorf game.

A state is the multiset of Fibonacci indices currently on the table, kept
as a dense count array of length i_max(n) + 2 (slot 0 unused, slot
i_max + 1 must stay empty).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from functools import cache
import logging
from typing import Any

from .exceptions import DomainError, EngineInvariantError, IllegalMoveError
from .fibcore import FibTable, build_fib_table, fibonacci, move_bounds, zeckendorf

_LOGGER = logging.getLogger(__name__)


class MoveKind(StrEnum):
    """The four move kinds."""

    ADD_ONES = "add-ones"
    COMBINE = "combine"
    SPLIT_TWOS = "split-twos"
    SPLIT = "split"


class Player(StrEnum):
    """The two players."""

    ONE = "one"
    TWO = "two"


@dataclass(frozen=True, slots=True)
class Move:
    """A single move, keyed by the largest index it reads."""

    kind: MoveKind
    index: int

    def __post_init__(self) -> None:
        """Validate the index against the move kind."""
        expected = {MoveKind.ADD_ONES: 1, MoveKind.SPLIT_TWOS: 2}.get(self.kind)
        if expected is not None and self.index != expected:
            raise DomainError(f"{self.kind} must sit at index {expected}")
        if self.kind is MoveKind.COMBINE and self.index < 2:
            raise DomainError("Combine(k) requires k >= 2")
        if self.kind is MoveKind.SPLIT and self.index < 3:
            raise DomainError("Split(k) requires k >= 3")

    @property
    def is_combining(self) -> bool:
        """Return True for moves that merge two terms into one."""
        return self.kind in (MoveKind.ADD_ONES, MoveKind.COMBINE)

    def __str__(self) -> str:
        """Return the move in the conventional notation."""
        if self.kind is MoveKind.ADD_ONES:
            return "AddOnes"
        if self.kind is MoveKind.SPLIT_TWOS:
            return "SplitTwos"
        if self.kind is MoveKind.COMBINE:
            return f"Combine({self.index})"
        return f"Split({self.index})"

    @staticmethod
    @cache
    def add_ones() -> Move:
        """F_1 and F_1 become F_2."""
        return Move(MoveKind.ADD_ONES, 1)

    @staticmethod
    @cache
    def combine(k: int) -> Move:
        """F_{k-1} and F_k become F_{k+1}."""
        return Move(MoveKind.COMBINE, k)

    @staticmethod
    @cache
    def split_twos() -> Move:
        """F_2 and F_2 become F_1 and F_3."""
        return Move(MoveKind.SPLIT_TWOS, 2)

    @staticmethod
    @cache
    def split(k: int) -> Move:
        """F_k and F_k become F_{k-2} and F_{k+1}."""
        return Move(MoveKind.SPLIT, k)


@dataclass(slots=True)
class MoveTally:
    """Per-index counters of combining (mc) and splitting (ms) moves.

    mc[1] counts AddOnes and mc[k] counts Combine(k); ms[2] counts SplitTwos
    and ms[k] counts Split(k). Unused low slots stay zero.
    """

    mc: list[int]
    ms: list[int]

    @classmethod
    def for_table(cls, table: FibTable) -> MoveTally:
        """Return an empty tally sized for the given table."""
        size = table.i_max + 2
        return cls(mc=[0] * size, ms=[0] * size)

    @property
    def combining_moves(self) -> int:
        """Return the number of combining moves."""
        return sum(self.mc)

    @property
    def splitting_moves(self) -> int:
        """Return the number of splitting moves."""
        return sum(self.ms)

    @property
    def total_moves(self) -> int:
        """Return the number of moves played."""
        return self.combining_moves + self.splitting_moves

    def mc_at(self, k: int) -> int:
        """Return mc[k], zero outside the table."""
        return self.mc[k] if 0 <= k < len(self.mc) else 0

    def ms_at(self, k: int) -> int:
        """Return ms[k], zero outside the table."""
        return self.ms[k] if 0 <= k < len(self.ms) else 0

    def record(self, move: Move) -> None:
        """Count one move."""
        if move.is_combining:
            self.mc[move.index] += 1
        else:
            self.ms[move.index] += 1

    def to_dict(self) -> dict[str, Any]:
        """Return mc over 1..i_max and ms over 2..i_max."""
        i_max = len(self.mc) - 2
        return {
            "mc": self.mc[1 : i_max + 1],
            "ms": self.ms[2 : i_max + 1],
            "total_moves": self.total_moves,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> MoveTally:
        """Rebuild a tally from its dictionary form."""
        return cls(mc=[0, *data["mc"], 0], ms=[0, 0, *data["ms"], 0])


@dataclass(slots=True)
class GameState:
    """Multiplicity of each Fibonacci index on the table."""

    counts: list[int]
    n: int
    table: FibTable = field(compare=False, repr=False)

    def copy(self) -> GameState:
        """Return an independent copy."""
        return GameState(counts=self.counts.copy(), n=self.n, table=self.table)

    @property
    def term_count(self) -> int:
        """Return the number of summands."""
        return sum(self.counts)

    @property
    def index_sum(self) -> int:
        """Return the sum of indices over all summands."""
        return sum(i * c for i, c in enumerate(self.counts))

    @property
    def value(self) -> int:
        """Return the total value of all summands."""
        values = self.table.values
        return sum(values[i] * c for i, c in enumerate(self.counts) if c)

    def key(self) -> tuple[int, ...]:
        """Return a hashable canonical key."""
        return tuple(self.counts)

    def indices(self) -> tuple[int, ...]:
        """Return the ascending indices of a state whose counts are all <= 1."""
        return tuple(i for i, c in enumerate(self.counts) if c)

    def __str__(self) -> str:
        """Return the canonical text encoding."""
        return encode_state(self)


def initial_state(n: int) -> GameState:
    """Return the starting position: n copies of F_1."""
    table = build_fib_table(n)
    counts = [0] * (table.i_max + 2)
    counts[1] = n
    _LOGGER.debug("Initial state for n=%d with %d index slots", n, len(counts))
    return GameState(counts=counts, n=n, table=table)


def encode_state(state: GameState) -> str:
    """Encode a state as ascending index^count pairs, e.g. 1^2,2^1."""
    return ",".join(f"{i}^{c}" for i, c in enumerate(state.counts) if c)


def decode_state(text: str) -> GameState:
    """Parse the index^count text encoding back into a state."""
    pairs: dict[int, int] = {}
    try:
        for token in text.split(","):
            index_text, count_text = token.strip().split("^")
            index, count = int(index_text), int(count_text)
            if index < 1 or count < 1 or index in pairs:
                raise ValueError(token)
            pairs[index] = count
    except ValueError as err:
        raise DomainError(f"Malformed state encoding {text!r}") from err

    n = sum(fibonacci(i) * c for i, c in pairs.items())
    table = build_fib_table(n)

    counts = [0] * (table.i_max + 2)
    for index, count in pairs.items():
        counts[index] = count
    return GameState(counts=counts, n=n, table=table)


def legal_moves(state: GameState) -> list[Move]:
    """Return every legal move in canonical order.

    AddOnes, Combine(2..), SplitTwos, Split(3..).
    """
    return legal_moves_from_counts(state.counts)


def legal_moves_from_counts(c: list[int]) -> list[Move]:
    """Return every legal move for a raw count array, in canonical order."""
    top = len(c) - 1
    moves: list[Move] = []
    if c[1] >= 2:
        moves.append(Move.add_ones())
    for k in range(2, top + 1):
        if c[k - 1] and c[k]:
            moves.append(Move.combine(k))
    if c[2] >= 2:
        moves.append(Move.split_twos())
    for k in range(3, top + 1):
        if c[k] >= 2:
            moves.append(Move.split(k))
    return moves


def is_terminal(state: GameState) -> bool:
    """Return True when the state is a Zeckendorf decomposition."""
    previous = 0
    for count in state.counts:
        if count > 1 or (count and previous):
            return False
        previous = count
    return True


def is_legal(counts: list[int], move: Move) -> bool:
    """Return True if the move's precondition holds."""
    k = move.index
    if k >= len(counts):
        return False
    if move.kind is MoveKind.COMBINE:
        return counts[k - 1] >= 1 and counts[k] >= 1
    return counts[k] >= 2


def apply_in_place(counts: list[int], move: Move) -> None:
    """Apply a move directly to a count array."""
    if not is_legal(counts, move):
        raise IllegalMoveError(f"{move} is not legal in {_encode_counts(counts)}")

    k = move.index
    if k + 1 >= len(counts):
        raise EngineInvariantError(f"{move} would create an index above i_max + 1")

    if move.kind is MoveKind.ADD_ONES:
        counts[1] -= 2
        counts[2] += 1
    elif move.kind is MoveKind.COMBINE:
        counts[k - 1] -= 1
        counts[k] -= 1
        counts[k + 1] += 1
    elif move.kind is MoveKind.SPLIT_TWOS:
        counts[2] -= 2
        counts[1] += 1
        counts[3] += 1
    else:
        counts[k] -= 2
        counts[k - 2] += 1
        counts[k + 1] += 1


def index_sum_delta(move: Move) -> int:
    """Return how much a move lowers the index sum."""
    if move.kind is MoveKind.COMBINE:
        return move.index - 2
    if move.kind is MoveKind.SPLIT:
        return 1
    return 0


def progress_measure(state: GameState) -> tuple[int, int, int]:
    """Return (index sum, term count, F_2 count); every move lowers it."""
    return state.index_sum, state.term_count, state.counts[2]


def check_transition(before: GameState, after: GameState, move: Move) -> None:
    """Raise EngineInvariantError unless the move kept every invariant."""
    if after.value != before.n:
        raise EngineInvariantError(
            f"{move} broke value conservation: {after.value} != {before.n}"
        )
    if after.counts[-1]:
        raise EngineInvariantError(f"{move} created an index above i_max({before.n})")

    term_drop = before.term_count - after.term_count
    if term_drop != (1 if move.is_combining else 0):
        raise EngineInvariantError(f"{move} changed the term count by {-term_drop}")

    index_drop = before.index_sum - after.index_sum
    if index_drop != index_sum_delta(move):
        raise EngineInvariantError(f"{move} changed the index sum by {-index_drop}")

    if not progress_measure(after) < progress_measure(before):
        raise EngineInvariantError(f"{move} did not lower the progress measure")


def apply_move(state: GameState, move: Move, tally: MoveTally) -> GameState:
    """Apply a legal move to a copy of the state and count it in the tally."""
    after = state.copy()
    apply_in_place(after.counts, move)
    check_transition(state, after, move)
    tally.record(move)
    _LOGGER.debug("%s: %s -> %s", move, encode_state(state), encode_state(after))
    return after


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    """One exact relation between the tally counters.

    relation is "==" or "<=" and reads lhs <relation> rhs.
    """

    label: str
    name: str
    lhs: int
    rhs: int
    relation: str

    @property
    def passed(self) -> bool:
        """Return True if the relation holds."""
        if self.relation == "==":
            return self.lhs == self.rhs
        return self.lhs <= self.rhs

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "label": self.label,
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> IdentityCheck:
        """Rebuild a check from its dictionary form."""
        return cls(
            label=data["label"],
            name=data["name"],
            lhs=data["lhs"],
            rhs=data["rhs"],
            relation=data["relation"],
        )


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Pass/fail results of every tally identity for one completed game."""

    n: int
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        """Return True if every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> tuple[IdentityCheck, ...]:
        """Return the failed checks."""
        return tuple(check for check in self.checks if not check.passed)

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "n": self.n,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        """Rebuild a report from its dictionary form."""
        return cls(
            n=data["n"],
            checks=tuple(IdentityCheck.from_dict(item) for item in data["checks"]),
        )


def verify_tally(n: int, tally: MoveTally) -> VerificationReport:
    """Check the move-count identities and bounds for a completed game on n."""
    decomposition = zeckendorf(n)
    lower, upper = move_bounds(n)
    top = max(len(tally.mc), len(tally.ms))

    weighted = sum((k - 2) * tally.mc_at(k) for k in range(3, top)) + sum(
        tally.ms_at(k) for k in range(3, top)
    )
    widest_combine = max(
        ((k - 2) * tally.mc_at(k) for k in range(3, top)), default=0
    )
    total = tally.total_moves

    z, iz = decomposition.z, decomposition.iz

    checks = (
        IdentityCheck("a", "index_sum_change", weighted, n - iz, "=="),
        IdentityCheck("b", "combining_moves", tally.combining_moves, n - z, "=="),
        IdentityCheck(
            "c",
            "low_index_splits",
            tally.ms_at(2) + tally.ms_at(3),
            2 * tally.mc_at(1) + tally.mc_at(2) - n + decomposition.delta1,
            "==",
        ),
        IdentityCheck("d", "lower_bound", lower, total, "<="),
        IdentityCheck("d", "upper_bound", total, upper, "<="),
        IdentityCheck("e", "combine_index_bound", widest_combine, n - iz, "<="),
        IdentityCheck("f", "split_twos_bound", tally.ms_at(2), n - 2 * z + 1, "<="),
    )
    report = VerificationReport(n=n, checks=checks)

    if report.passed:
        _LOGGER.debug("All tally identities hold for n=%d (%d moves)", n, total)
    else:
        _LOGGER.error(
            "Tally identities failed for n=%d: %s",
            n,
            ", ".join(check.name for check in report.failures),
        )
    return report


def winner_by_parity(total_moves: int) -> Player | None:
    """Return the player who made the last move of a game of this length."""
    if total_moves == 0:
        return None
    return Player.ONE if total_moves % 2 else Player.TWO


def _encode_counts(counts: list[int]) -> str:
    """Encode a raw count array."""
    return ",".join(f"{i}^{c}" for i, c in enumerate(counts) if c)
