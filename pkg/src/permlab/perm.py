"""Permutations as plain tuples, plus pattern containment.

A permutation of length n is a tuple holding each of 1..n exactly once.
Positions and values are 1-based everywhere in the public API; an embedding
is the increasing tuple of host positions an occurrence uses.

>>> contains((2, 4, 1, 3), (4, 3, 5, 8, 2, 1, 6, 7))
True
>>> find_embedding((1, 2), (2, 1, 3))
(1, 3)
"""

from __future__ import annotations

from functools import lru_cache
from math import inf
from typing import Iterable, Iterator, Optional, Sequence

from permlab.errors import InvalidWord

Perm = tuple[int, ...]
Embedding = tuple[int, ...]

__all__ = [
    "Perm", "Embedding",
    "standardize", "is_permutation", "parse_perm", "format_perm",
    "pattern_at", "contains", "find_embedding", "enumerate_embeddings",
    "avoids", "find_basis_occurrence", "lr_minima", "rl_maxima", "covers",
    "reverse", "complement", "inverse", "identity", "decreasing",
]


def standardize(word: Iterable) -> Perm:
    """Return the permutation order-isomorphic to ``word``.

    >>> standardize((3, 10, 7))
    (1, 3, 2)
    """
    word = tuple(word)
    ranked = sorted(range(len(word)), key=word.__getitem__)
    out = [0] * len(word)
    for rank, idx in enumerate(ranked, 1):
        out[idx] = rank
    for a, b in zip(ranked, ranked[1:]):
        if word[a] == word[b]:
            raise InvalidWord(f"duplicate entry {word[a]!r} in {word!r}")
    return tuple(out)


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def parse_perm(text: str) -> Perm:
    """Read ``"4 3 5 8 2 1 6 7"`` or the compact ``"43582167"`` (n <= 9).

    Commas are accepted as separators. The empty string gives the empty
    permutation.
    """
    text = text.strip().replace(",", " ")
    if not text:
        return ()
    tokens = text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        word = tuple(int(t) for t in tokens)
    except ValueError:
        raise InvalidWord(f"cannot parse permutation from {text!r}") from None
    if not is_permutation(word):
        raise InvalidWord(f"{text!r} is not a permutation of 1..{len(word)}")
    return word


def format_perm(perm: Sequence[int], compact: bool = False) -> str:
    if compact and len(perm) <= 9:
        return "".join(map(str, perm))
    return " ".join(map(str, perm))


def pattern_at(host: Sequence[int], positions: Iterable[int]) -> Perm:
    """Standardized subsequence of ``host`` at the given 1-based positions."""
    return standardize(host[p - 1] for p in positions)


@lru_cache(maxsize=4096)
def _plan(pattern: Perm) -> tuple[tuple[int, int], ...]:
    # For each pattern index, the earlier indices holding the nearest smaller
    # and nearest larger values (-1 when there is none).
    plan = []
    for i, v in enumerate(pattern):
        lo = hi = -1
        for j in range(i):
            w = pattern[j]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = j
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = j
        plan.append((lo, hi))
    return tuple(plan)


def enumerate_embeddings(pattern: Sequence[int], host: Sequence[int]) -> Iterator[Embedding]:
    """Yield every embedding of ``pattern`` into ``host`` in lexicographic order.

    Depth-first over pattern indices; a host value is only tried when it lies
    strictly between the images of the pattern's nearest smaller and nearest
    larger earlier values.
    """
    pattern, host = tuple(pattern), tuple(host)
    k, n = len(pattern), len(host)
    if k > n:
        return
    plan = _plan(pattern)
    chosen = [0] * k

    def extend(i: int, start: int) -> Iterator[Embedding]:
        if i == k:
            yield tuple(c + 1 for c in chosen)
            return
        lo_i, hi_i = plan[i]
        # hosts need not be standardized, so the open ends are unbounded
        lo = host[chosen[lo_i]] if lo_i >= 0 else -inf
        hi = host[chosen[hi_i]] if hi_i >= 0 else inf
        for j in range(start, n - k + i + 1):
            if lo < host[j] < hi:
                chosen[i] = j
                yield from extend(i + 1, j + 1)

    yield from extend(0, 0)


def find_embedding(pattern: Sequence[int], host: Sequence[int]) -> Optional[Embedding]:
    """Lexicographically least embedding, or None."""
    return next(enumerate_embeddings(pattern, host), None)


def contains(pattern: Sequence[int], host: Sequence[int]) -> bool:
    return find_embedding(pattern, host) is not None


def avoids(host: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    return all(not contains(b, host) for b in basis)


def find_basis_occurrence(host: Sequence[int], basis: Iterable[Sequence[int]]):
    """First ``(pattern, embedding)`` of a basis element in ``host``, or None.

    Basis elements are tried in sorted order so the witness is reproducible.
    """
    for b in sorted(tuple(b) for b in basis):
        emb = find_embedding(b, host)
        if emb is not None:
            return b, emb
    return None


def lr_minima(perm: Sequence[int]) -> tuple[int, ...]:
    """Positions of left-to-right minima.

    >>> lr_minima((7, 9, 6, 3, 8, 5, 4, 1, 2))
    (1, 3, 4, 8)
    """
    out = []
    best = None
    for i, v in enumerate(perm, 1):
        if best is None or v < best:
            best = v
            out.append(i)
    return tuple(out)


def rl_maxima(perm: Sequence[int]) -> tuple[int, ...]:
    """Positions of right-to-left maxima, in increasing position order."""
    out = []
    best = None
    for i in range(len(perm), 0, -1):
        v = perm[i - 1]
        if best is None or v > best:
            best = v
            out.append(i)
    return tuple(reversed(out))


def covers(perm: Sequence[int], i: int, j: int) -> bool:
    """True iff the element at position i covers the one at position j."""
    n = len(perm)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) out of range for length {n}")
    return i < j and perm[i - 1] < perm[j - 1]


def reverse(perm: Sequence[int]) -> Perm:
    return tuple(reversed(perm))


def complement(perm: Sequence[int]) -> Perm:
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def inverse(perm: Sequence[int]) -> Perm:
    out = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        out[v - 1] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> Perm:
    return tuple(range(n, 0, -1))
