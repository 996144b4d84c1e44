"""Exceptions for the Zeckendorf game toolkit."""

from __future__ import annotations


class ZeckendorfError(Exception):
    """Base error for the Zeckendorf game toolkit."""


class DomainError(ZeckendorfError, ValueError):
    """Error to indicate an argument outside the supported domain."""


class IllegalMoveError(ZeckendorfError):
    """Error to indicate a move whose precondition does not hold."""


class EngineInvariantError(ZeckendorfError):
    """Error to indicate the engine broke one of its own invariants."""


class TerminalStateError(ZeckendorfError):
    """Error to indicate a move was requested on a finished game."""


class CapExceededError(ZeckendorfError):
    """Error to indicate the state space is larger than the allowed cap."""

    def __init__(self, states_visited: int, state_cap: int) -> None:
        """Initialize the error."""
        super().__init__(
            f"State cap exceeded: visited {states_visited} states (cap {state_cap})"
        )
        self.states_visited = states_visited
        self.state_cap = state_cap


class TooFewGamesError(ZeckendorfError):
    """Error to indicate a sample too small for a normality report."""


class DegenerateDistributionError(ZeckendorfError):
    """Error to indicate a sample with zero variance."""


class BatchFailed(ZeckendorfError):
    """Error to indicate a play-out job failed inside the coordinator."""


class InvalidConfig(ZeckendorfError):
    """Error to indicate invalid command-line configuration."""
