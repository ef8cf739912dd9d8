"""Slow reference implementations.

Everything here is written directly from the definitions and imports no
algorithmic helper from the rest of the package (only the ``ClassSpec``
record and exception types), so it can serve as an independent check on
the fast code paths. Expect these to be orders of magnitude slower.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Optional

from permlab.errors import ResourceLimit

CONTAINS_BOUND = 12
CLASS_BOUND = 9
MERGE_BOUND = 12
AMALGAM_BOUND = 9


def _std(seq):
    ranks = {v: r for r, v in enumerate(sorted(seq), 1)}
    return tuple(ranks[v] for v in seq)


def _same_order(a, b):
    return all((a[i] < a[j]) == (b[i] < b[j])
               for i in range(len(a)) for j in range(i + 1, len(a)))


def brute_contains(pattern, host, bound: int = CONTAINS_BOUND) -> bool:
    """Try every index subset of the pattern's size."""
    if len(host) > bound:
        raise ResourceLimit(f"host length {len(host)} exceeds oracle bound {bound}")
    pattern = tuple(pattern)
    return any(_same_order(pattern, [host[i] for i in idx])
               for idx in combinations(range(len(host)), len(pattern)))


def brute_embeddings(pattern, host):
    """All embeddings as 1-based index tuples, unpruned."""
    pattern = tuple(pattern)
    return [tuple(i + 1 for i in idx)
            for idx in combinations(range(len(host)), len(pattern))
            if _same_order(pattern, [host[i] for i in idx])]


def brute_patterns(host) -> set:
    """Every pattern occurring in ``host``, from all index subsets."""
    host = tuple(host)
    return {_std([host[i] for i in idx])
            for k in range(len(host) + 1)
            for idx in combinations(range(len(host)), k)}


def brute_class(basis, n: int, bound: int = CLASS_BOUND) -> set:
    """All length-n permutations avoiding every basis element."""
    if n > bound:
        raise ResourceLimit(f"n = {n} exceeds oracle bound {bound}")
    return {p for p in permutations(range(1, n + 1))
            if not any(brute_contains(b, p) for b in basis)}


def _lr_min_flags(seq):
    return [all(seq[j] > seq[i] for j in range(i)) for i in range(len(seq))]


def brute_lr_closure_member(perm, base, memo: Optional[dict] = None) -> bool:
    """Closure membership by trying every nontrivial single-block contraction.

    A block is any window of at least two and at most n-1 consecutive
    positions whose values are consecutive; it qualifies when the point it
    contracts to is a left-to-right minimum of the contracted permutation.
    ``base`` is a membership predicate for the base class.
    """
    if memo is None:
        memo = {}
    perm = tuple(perm)
    if perm in memo:
        return memo[perm]
    result = bool(base(perm))
    n = len(perm)
    if not result:
        for a in range(n):
            for b in range(a + 2, n + 1):
                if b - a >= n:
                    continue
                window = perm[a:b]
                if max(window) - min(window) != b - a - 1:
                    continue
                contracted = _std(perm[:a] + (min(window),) + perm[b:])
                if not _lr_min_flags(contracted)[a]:
                    continue
                if (brute_lr_closure_member(contracted, base, memo)
                        and brute_lr_closure_member(_std(window), base, memo)):
                    result = True
                    break
            if result:
                break
    memo[perm] = result
    return result


def brute_member(spec, perm, memo: Optional[dict] = None) -> bool:
    def base(p):
        return not any(brute_contains(b, p) for b in spec.basis)

    if spec.lr_closed:
        return brute_lr_closure_member(perm, base, memo)
    return base(perm)


def brute_merge(perm, spec_a, spec_b, bound: int = MERGE_BOUND) -> bool:
    """Try all 2^n red/blue colorings."""
    if len(perm) > bound:
        raise ResourceLimit(f"length {len(perm)} exceeds oracle bound {bound}")
    memo_a, memo_b = {}, {}
    for colors in product((0, 1), repeat=len(perm)):
        red = _std([v for v, c in zip(perm, colors) if c == 0])
        blue = _std([v for v, c in zip(perm, colors) if c == 1])
        if brute_member(spec_a, red, memo_a) and brute_member(spec_b, blue, memo_b):
            return True
    return False


def _amalgam_ok(sigma, m1, m2) -> bool:
    (p1, k1), (p2, k2) = m1, m2
    images1 = {e[k1 - 1] for e in brute_embeddings(p1, sigma)}
    if not images1:
        return False
    return any(e[k2 - 1] in images1 for e in brute_embeddings(p2, sigma))


def brute_min_amalgam(m1, m2, spec, max_len: int,
                      bound: int = AMALGAM_BOUND) -> Optional[int]:
    """Smallest length of a 1-amalgam of two marked permutations in ``spec``.

    Marked permutations are ``(perm, mark)`` pairs with 1-based marks.
    Scans all of S_L for each length L, so keep ``max_len`` small.
    """
    if max_len > bound:
        raise ResourceLimit(f"max_len {max_len} exceeds oracle bound {bound}")
    m1 = (tuple(m1[0]), m1[1])
    m2 = (tuple(m2[0]), m2[1])
    memo: dict = {}
    for length in range(max(len(m1[0]), len(m2[0])), max_len + 1):
        for sigma in permutations(range(1, length + 1)):
            if _amalgam_ok(sigma, m1, m2) and brute_member(spec, sigma, memo):
                return length
    return None
