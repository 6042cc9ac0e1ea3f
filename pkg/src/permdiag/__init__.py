"""Permdiag - diagonály na permutaedrech, multiplihedrech a asociaedrech."""

__version__ = "0.3.0"
