"""Deterministic random number generation for play-outs.

The generator is SplitMix64, so a seed maps to the same stream on every
platform and in every implementation:

    state <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z <- state
    z <- ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z <- ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

The initial state is the seed reduced mod 2**64. A game with index i in a
batch seeded with S uses seed S + i.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_TWO_POW_64 = 1 << 64


class SplitMix64:
    """Generate a deterministic 64-bit pseudo-random sequence."""

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15
    MIX_1 = 0xBF58476D1CE4E5B9
    MIX_2 = 0x94D049BB133111EB

    def __init__(self, seed: int = 0) -> None:
        """Initialize the generator."""
        self._seed = seed
        self._state = seed & _MASK64

    @property
    def seed(self) -> int:
        return self._seed

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        self._state = (self._state + self.GOLDEN_GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * self.MIX_1) & _MASK64
        z = ((z ^ (z >> 27)) * self.MIX_2) & _MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Return a uniform integer in [0, m)."""
        if m < 1:
            raise ValueError(f"Upper bound must be positive, got {m}")
        # reject the tail that would bias the modulo
        limit = _TWO_POW_64 - _TWO_POW_64 % m
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % m

    def random(self) -> float:
        """Return a float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def normal_pair(self) -> tuple[float, float]:
        """Return two independent standard normal draws (Box-Muller)."""
        u1 = 1.0 - self.random()
        u2 = self.random()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        return radius * math.cos(angle), radius * math.sin(angle)

