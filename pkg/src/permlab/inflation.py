"""Inflations, LR-inflations, simplicity and LR-closure certificates.

An LR-inflation replaces only the left-to-right minima of a skeleton by
blocks. A permutation is a nontrivial LR-inflation exactly when it has an
"LR-block": a window of 2..n-1 consecutive positions holding consecutive
values, with everything to its left larger than everything inside it.
Contracting such a window to a point leaves a left-to-right minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from permlab.errors import ArityError, NotInClass
from permlab.perm import (Perm, avoids, find_basis_occurrence, format_perm,
                          lr_minima, parse_perm, rl_maxima, standardize)

Predicate = Callable[[Perm], bool]

AV_123 = ((1, 2, 3),)
MAIN_BASIS = ((1, 4, 2, 3), (1, 3, 4, 2))


@dataclass(frozen=True)
class BlockInterval:
    """Positions ``start..end`` (1-based, inclusive) holding values ``low..high``."""

    start: int
    end: int
    low: int
    high: int

    def __len__(self) -> int:
        return self.end - self.start + 1

    @property
    def positions(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class InflationTree:
    """A skeleton whose LR-minima are replaced by the values of child trees.

    A leaf has no children (every LR-minimum stays a single point);
    otherwise there is exactly one child per LR-minimum of the skeleton.
    """

    skeleton: Perm
    children: tuple["InflationTree", ...] = ()

    def __post_init__(self):
        if self.children and len(self.children) != len(lr_minima(self.skeleton)):
            raise ArityError(
                f"skeleton {format_perm(self.skeleton, True)} has "
                f"{len(lr_minima(self.skeleton))} LR-minima but "
                f"{len(self.children)} children were given")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def evaluate(self) -> Perm:
        if self.is_leaf:
            return self.skeleton
        return lr_inflate(self.skeleton, [c.evaluate() for c in self.children])

    def skeletons(self):
        """Every skeleton in the tree, preorder."""
        yield self.skeleton
        for c in self.children:
            yield from c.skeletons()

    def to_json(self) -> dict:
        return {"skeleton": format_perm(self.skeleton, compact=True),
                "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, data: dict) -> "InflationTree":
        return cls(parse_perm(data["skeleton"]),
                   tuple(cls.from_json(c) for c in data.get("children", [])))


SINGLETON = InflationTree((1,))


def leaf(perm: Sequence[int]) -> InflationTree:
    return InflationTree(tuple(perm))


def inflate_with_spans(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]):
    """Inflate and also report where each block landed.

    Returns ``(perm, spans)`` with ``spans[i] = (start, end)``, the 1-based
    position range occupied by the block replacing skeleton position i+1.
    """
    if len(blocks) != len(skeleton):
        raise ArityError(f"{len(blocks)} blocks for a skeleton of length {len(skeleton)}")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("inflation blocks must be nonempty")
    sizes_by_value = [0] * (len(skeleton) + 1)
    for v, b in zip(skeleton, blocks):
        sizes_by_value[v] = len(b)
    offset = [0] * (len(skeleton) + 1)
    for v in range(2, len(skeleton) + 1):
        offset[v] = offset[v - 1] + sizes_by_value[v - 1]
    out: list[int] = []
    spans = []
    for v, b in zip(skeleton, blocks):
        spans.append((len(out) + 1, len(out) + len(b)))
        out.extend(offset[v] + x for x in b)
    return tuple(out), spans


def inflate(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]) -> Perm:
    """Substitute ``blocks[i]`` for the i-th entry of ``skeleton``.

    >>> inflate((2, 4, 1, 3), [(2, 1, 3), (1,), (2, 1), (1, 2)])
    (4, 3, 5, 8, 2, 1, 6, 7)
    """
    return inflate_with_spans(skeleton, blocks)[0]


def _expand_lr_blocks(skeleton, blocks):
    mins = lr_minima(skeleton)
    if len(blocks) != len(mins):
        raise ArityError(f"{len(blocks)} blocks for {len(mins)} LR-minima")
    full: list = [(1,)] * len(skeleton)
    for pos, b in zip(mins, blocks):
        full[pos - 1] = tuple(b)
    return full


def lr_inflate_with_spans(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]):
    return inflate_with_spans(skeleton, _expand_lr_blocks(skeleton, blocks))


def lr_inflate(skeleton: Sequence[int], blocks: Sequence[Sequence[int]]) -> Perm:
    """Inflate the LR-minima of ``skeleton`` by ``blocks``, left to right.

    >>> lr_inflate((2, 4, 1, 3), [(2, 1, 3), (2, 1)])
    (4, 3, 5, 7, 2, 1, 6)
    """
    return inflate_with_spans(skeleton, _expand_lr_blocks(skeleton, blocks))[0]


def _intervals_from(perm, a):
    # (b, low, high) for every window perm[a..b] holding consecutive values
    lo = hi = perm[a]
    for b in range(a, len(perm)):
        v = perm[b]
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
        if hi - lo == b - a:
            yield b, lo, hi


def find_lr_block(perm: Sequence[int]) -> Optional[BlockInterval]:
    """Leftmost, then largest, LR-block of ``perm``; None if LR-simple."""
    n = len(perm)
    prefix_min = n + 1
    for a in range(n - 1):
        best = None
        for b, lo, hi in _intervals_from(perm, a):
            if hi >= prefix_min:
                break
            if 2 <= b - a + 1 <= n - 1:
                best = BlockInterval(a + 1, b + 1, lo, hi)
        if best is not None:
            return best
        prefix_min = min(prefix_min, perm[a])
    return None


def find_interval(perm: Sequence[int]) -> Optional[BlockInterval]:
    """Leftmost, then largest, interval of size 2..n-1 (no LR condition)."""
    n = len(perm)
    for a in range(n - 1):
        best = None
        for b, lo, hi in _intervals_from(perm, a):
            if 2 <= b - a + 1 <= n - 1:
                best = BlockInterval(a + 1, b + 1, lo, hi)
        if best is not None:
            return best
    return None


def is_lr_simple(perm: Sequence[int]) -> bool:
    return find_lr_block(perm) is None


def is_simple(perm: Sequence[int]) -> bool:
    return find_interval(perm) is None


def contract(perm: Sequence[int], block: BlockInterval) -> Perm:
    """Collapse ``block`` to one point and standardize."""
    return standardize(tuple(perm[:block.start - 1]) + (block.low,)
                       + tuple(perm[block.end:]))


def block_content(perm: Sequence[int], block: BlockInterval) -> Perm:
    return tuple(v - block.low + 1 for v in perm[block.start - 1:block.end])


def in_lr_closure(perm: Sequence[int], base: Predicate,
                  memo: Optional[dict] = None) -> bool:
    """Decide membership in the LR-closure of the class ``base`` decides.

    Since the closure is a class, any single LR-block split of a member
    yields two members; so checking the first LR-block found is enough.
    """
    if memo is None:
        memo = {}
    perm = tuple(perm)

    def decide(p):
        hit = memo.get(p)
        if hit is not None:
            return hit
        if base(p):
            result = True
        else:
            block = find_lr_block(p) if len(p) >= 2 else None
            result = (block is not None
                      and decide(contract(p, block))
                      and decide(block_content(p, block)))
        memo[p] = result
        return result

    return decide(perm)


def lr_closure_member(perm: Sequence[int], base: Predicate,
                      memo: Optional[dict] = None) -> Optional[InflationTree]:
    """Certificate tree for membership in the LR-closure, or None.

    A permutation in the base class is returned as a leaf. Otherwise
    LR-blocks are contracted (leftmost-largest first) until the skeleton is
    LR-simple; that skeleton must lie in the base class, and each
    contracted region becomes a child, certified recursively.
    """
    if memo is None:
        memo = {}

    def build(p):
        if p in memo:
            return memo[p]
        memo[p] = tree = _build(p)
        return tree

    def _build(p):
        if base(p):
            return leaf(p)
        regions = [(i, i) for i in range(len(p))]
        skeleton = p
        while len(skeleton) >= 2:
            block = find_lr_block(skeleton)
            if block is None:
                break
            s, e = block.start - 1, block.end - 1
            regions[s:e + 1] = [(regions[s][0], regions[e][1])]
            skeleton = contract(skeleton, block)
        if skeleton == p or not base(skeleton):
            return None
        mins = set(lr_minima(skeleton))
        children = []
        for pos, (a, b) in enumerate(regions, 1):
            if pos not in mins:
                assert a == b, "contracted region landed off an LR-minimum"
                continue
            if a == b:
                children.append(SINGLETON)
                continue
            child = build(standardize(p[a:b + 1]))
            if child is None:
                return None
            children.append(child)
        return InflationTree(skeleton, tuple(children))

    return build(tuple(perm))


def structure_decompose(perm: Sequence[int]) -> InflationTree:
    """Decompose a member of Av(1423, 1342) into LR-inflations of 123-avoiders.

    The right-to-left maxima stay put; every other point is grouped by the
    gap between maxima it sits in positionally and the gap it sits in by
    value. The nonempty groups form a descending chain of intervals, each
    contracted to a left-to-right minimum of a 123-avoiding skeleton and
    decomposed recursively.
    """
    perm = tuple(perm)
    hit = find_basis_occurrence(perm, MAIN_BASIS)
    if hit is not None:
        raise NotInClass(f"{format_perm(perm)} contains {format_perm(hit[0], True)}",
                         pattern=hit[0], embedding=hit[1])
    return _decompose(perm)


def _decompose(perm: Perm) -> InflationTree:
    if avoids(perm, AV_123):
        return leaf(perm)
    n = len(perm)
    maxima = rl_maxima(perm)
    max_values = [perm[i - 1] for i in maxima]
    value_bounds = [n + 1] + max_values + [0]
    groups: dict[tuple[int, int], list[int]] = {}
    maxima_set = set(maxima)
    j = 0
    for x in range(1, n + 1):
        if x in maxima_set:
            j += 1
            continue
        y = perm[x - 1]
        k = next(k for k in range(j + 2, len(value_bounds))
                 if value_bounds[k] < y < value_bounds[k - 1])
        groups.setdefault((j + 1, k), []).append(x)

    chain = sorted(groups.values(), key=lambda g: g[0])
    for g in chain:
        values = [perm[x - 1] for x in g]
        if g[-1] - g[0] != len(g) - 1 or max(values) - min(values) != len(g) - 1:
            raise NotInClass(f"group at positions {g} of {format_perm(perm)} is not an interval")
    for g, h in zip(chain, chain[1:]):
        if min(perm[x - 1] for x in g) < max(perm[x - 1] for x in h):
            raise NotInClass(f"groups {g} and {h} of {format_perm(perm)} are not descending")

    # one representative point per group, plus the maxima themselves
    points = [(i, perm[i - 1], None) for i in maxima]
    points += [(g[0], perm[g[0] - 1], g) for g in chain]
    points.sort()
    skeleton = standardize(v for _, v, _ in points)
    if not avoids(skeleton, AV_123):
        raise NotInClass(f"skeleton {format_perm(skeleton)} of {format_perm(perm)} contains 123")
    mins = set(lr_minima(skeleton))
    children = []
    for pos, (_, _, g) in enumerate(points, 1):
        if pos not in mins:
            if g is not None and len(g) > 1:
                raise NotInClass(f"interval {g} of {format_perm(perm)} is not at an LR-minimum")
            continue
        if g is None or len(g) == 1:
            children.append(SINGLETON)
        else:
            children.append(_decompose(standardize(perm[x - 1] for x in g)))
    return InflationTree(skeleton, tuple(children))
