"""Two-player Zeckendorf game toolkit.

Plays the game under deterministic and random strategies, solves small
instances exhaustively and checks the move-count identities of every
completed game.
"""

from __future__ import annotations

from .analysis import brute_force_winner, enumerate_games, solve_winner
from .engine import GameState, Move, MoveKind, MoveTally, Player, initial_state
from .exceptions import ZeckendorfError
from .fibcore import move_bounds, zeckendorf
from .strategies import GameRecord, get_strategy, play_out

__all__ = [
    "GameRecord",
    "GameState",
    "Move",
    "MoveKind",
    "MoveTally",
    "Player",
    "ZeckendorfError",
    "brute_force_winner",
    "enumerate_games",
    "get_strategy",
    "initial_state",
    "move_bounds",
    "play_out",
    "solve_winner",
    "zeckendorf",
]
