"""Fibonacci arithmetic and Zeckendorf decompositions.

Fibonacci numbers use the normalization F_1 = 1, F_2 = 2,
F_k = F_{k-1} + F_{k-2}; indices are 1-based everywhere and index 0 never
appears in a decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import logging
import math
from typing import Any

from .const import INT64_MAX, PHI
from .exceptions import DomainError

_LOGGER = logging.getLogger(__name__)


def _check_positive(n: int) -> None:
    """Reject anything that is not a positive integer."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"Expected a positive integer, got {n!r}")
    if n < 1:
        raise DomainError(f"Expected a positive integer, got {n}")


@dataclass(frozen=True, slots=True)
class FibTable:
    """Fibonacci values F_1 .. F_{i_max + 1} for a fixed limit.

    values[0] is an unused placeholder so that values[k] is F_k.
    """

    values: tuple[int, ...]
    limit: int
    i_max: int

    @property
    def terms(self) -> tuple[int, ...]:
        """Return F_1 .. F_{i_max + 1} without the placeholder."""
        return self.values[1:]

    def fib(self, k: int) -> int:
        """Return F_k for 1 <= k <= i_max + 1."""
        if not 1 <= k < len(self.values):
            raise DomainError(f"Index {k} outside table range 1..{self.i_max + 1}")
        return self.values[k]


@dataclass(frozen=True, slots=True)
class ZeckDecomposition:
    """The Zeckendorf decomposition of n and its derived quantities."""

    n: int
    indices: tuple[int, ...]
    values: tuple[int, ...]
    z: int
    iz: int
    delta1: int

    def to_dict(self) -> dict[str, Any]:
        """Return a JSON-ready representation."""
        return {
            "n": self.n,
            "indices": list(self.indices),
            "values": list(self.values),
            "z": self.z,
            "iz": self.iz,
            "delta1": self.delta1,
        }


@lru_cache(maxsize=256, typed=True)
def build_fib_table(n: int) -> FibTable:
    """Build the Fibonacci table for limit n, one index past i_max(n)."""
    _check_positive(n)

    values = [0, 1, 2]
    while values[-1] <= n:
        nxt = values[-1] + values[-2]
        if nxt > INT64_MAX:
            raise DomainError(f"Fibonacci table for n={n} overflows 64-bit integers")
        values.append(nxt)

    table = FibTable(values=tuple(values), limit=n, i_max=len(values) - 2)
    _LOGGER.debug("Built Fibonacci table for n=%d with i_max=%d", n, table.i_max)
    return table


@lru_cache(maxsize=128, typed=True)
def fibonacci(k: int) -> int:
    """Return F_k for k >= 1."""
    _check_positive(k)
    previous, current = 1, 1
    for _ in range(k):
        previous, current = current, previous + current
    return previous


def zeckendorf(n: int) -> ZeckDecomposition:
    """Decompose n greedily into non-adjacent Fibonacci numbers."""
    table = build_fib_table(n)

    indices: list[int] = []
    remainder = n
    for k in range(table.i_max, 0, -1):
        if table.values[k] <= remainder:
            indices.append(k)
            remainder -= table.values[k]
            if remainder == 0:
                break

    indices.reverse()
    decomposition = ZeckDecomposition(
        n=n,
        indices=tuple(indices),
        values=tuple(table.values[k] for k in indices),
        z=len(indices),
        iz=sum(indices),
        delta1=1 if indices[0] == 1 else 0,
    )
    _LOGGER.debug(
        "Zeckendorf decomposition of %d: indices=%s", n, decomposition.indices
    )
    return decomposition


def move_bounds(n: int) -> tuple[int, int]:
    """Return the (lower, upper) bounds on the number of moves in any game on n."""
    decomposition = zeckendorf(n)
    lower = n - decomposition.z
    upper = 3 * n - 3 * decomposition.z - decomposition.iz + 1
    return lower, upper


def legacy_upper_bound(n: int) -> int:
    """Return the older i_max(n) * n bound on the number of moves."""
    return build_fib_table(n).i_max * n


def imax_bound(n: int) -> float:
    """Return log_phi(n * sqrt(5)), an upper bound for i_max(n)."""
    _check_positive(n)
    return math.log(n * math.sqrt(5)) / math.log(PHI)


def index_sum_bound(n: int) -> float:
    """Return (log_phi(n * sqrt(5)) + 3)^2 / 2, an upper bound for IZ(n)."""
    return (imax_bound(n) + 3) ** 2 / 2
