"""Allow running the toolkit with python -m zeckendorf_game."""

from .cli import main

main()
