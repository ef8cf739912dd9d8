"""Permutation patterns, LR-inflations, merges and 1-amalgamation certificates."""

__version__ = "0.1.0"
