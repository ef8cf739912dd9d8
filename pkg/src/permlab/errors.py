"""Exception types shared across permlab."""

from __future__ import annotations


class PermlabError(Exception):
    """Base class for domain errors."""


class InvalidWord(PermlabError, ValueError):
    """A word could not be read as a permutation (duplicates, bad tokens)."""


class ArityError(PermlabError, ValueError):
    """Wrong number of blocks supplied to an inflation."""


class UnsupportedSpec(PermlabError):
    """The operation cannot handle this kind of class description."""


class ResourceLimit(PermlabError):
    """Input exceeds a configured search bound."""


class NotInClass(PermlabError):
    """A permutation is outside the class an operation requires.

    ``pattern`` and ``embedding`` identify a forbidden occurrence when one
    is known, so callers can report a concrete witness.
    """

    def __init__(self, message: str, pattern=None, embedding=None):
        super().__init__(message)
        self.pattern = pattern
        self.embedding = embedding

    def to_json(self) -> dict:
        return {
            "error": "NotInClass",
            "message": str(self),
            "pattern": None if self.pattern is None else list(self.pattern),
            "embedding": None if self.embedding is None else list(self.embedding),
        }


class MarkIsLRMinimum(PermlabError):
    """An LR-amalgamation was requested over a marked LR-minimum."""
