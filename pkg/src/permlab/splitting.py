"""Merge and LR-merge colorings, and the splitters for Av(123) and Av(1423, 1342).

Colors are single characters: ``R`` red, ``B`` blue, ``*`` both. In an
LR-merge the left-to-right minima are exactly the ``*`` positions and belong
to both parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from permlab.classes import ClassSpec, member
from permlab.errors import NotInClass, ResourceLimit
from permlab.inflation import AV_123, InflationTree, structure_decompose
from permlab.perm import (Perm, contains, find_basis_occurrence, format_perm,
                          lr_minima, standardize)

RED, BLUE, BOTH = "R", "B", "*"
MERGE, LR_MERGE = "merge", "lr_merge"

RAMSEY_BOUND = 16


@dataclass(frozen=True)
class TwoColoring:
    perm: Perm
    colors: tuple[str, ...]
    mode: str = MERGE

    def __post_init__(self):
        if len(self.colors) != len(self.perm):
            raise ValueError("one color per element required")
        if any(c not in (RED, BLUE, BOTH) for c in self.colors):
            raise ValueError(f"unknown color in {self.colors!r}")
        if self.mode == MERGE:
            if BOTH in self.colors:
                raise ValueError("merge colorings cannot use Both")
        elif self.mode == LR_MERGE:
            both = tuple(i for i, c in enumerate(self.colors, 1) if c == BOTH)
            if both != lr_minima(self.perm):
                raise ValueError("LR-merge colorings use Both exactly on the LR-minima")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    def _part(self, color: str) -> Perm:
        return standardize(v for v, c in zip(self.perm, self.colors) if c in (color, BOTH))

    def red_part(self) -> Perm:
        return self._part(RED)

    def blue_part(self) -> Perm:
        return self._part(BLUE)

    def to_json(self) -> dict:
        return {"mode": self.mode, "colors": "".join(self.colors)}

    @classmethod
    def from_json(cls, data: dict, perm: Sequence[int]) -> "TwoColoring":
        return cls(tuple(perm), tuple(data["colors"]), data["mode"])


@dataclass(frozen=True)
class Run:
    """Non-minimal positions sharing one covering LR-minimum ``anchor``."""

    members: tuple[int, ...]
    anchor: int


def coloring_valid(coloring: TwoColoring, spec_a: ClassSpec, spec_b: ClassSpec) -> bool:
    return (member(spec_a, coloring.red_part())
            and member(spec_b, coloring.blue_part()))


def _search(perm, spec_a, spec_b, lr: bool) -> Optional[TwoColoring]:
    perm = tuple(perm)
    mins = set(lr_minima(perm)) if lr else set()
    memos = ({}, {})
    cache: dict = {}

    def ok(side, seq):
        key = (side, standardize(seq))
        hit = cache.get(key)
        if hit is None:
            spec = spec_a if side == 0 else spec_b
            cache[key] = hit = member(spec, key[1], memos[side])
        return hit

    colors: list[str] = []
    red: list[int] = []
    blue: list[int] = []

    def place(i):
        if i == len(perm):
            return True
        v = perm[i]
        if i + 1 in mins:
            choices = [(BOTH, True, True)]
        else:
            choices = [(RED, True, False), (BLUE, False, True)]
        for c, to_red, to_blue in choices:
            if to_red:
                red.append(v)
            if to_blue:
                blue.append(v)
            if (not to_red or ok(0, red)) and (not to_blue or ok(1, blue)):
                colors.append(c)
                if place(i + 1):
                    return True
                colors.pop()
            if to_red:
                red.pop()
            if to_blue:
                blue.pop()
        return False

    if place(0):
        return TwoColoring(perm, tuple(colors), LR_MERGE if lr else MERGE)
    return None


def check_merge(perm: Sequence[int], spec_a: ClassSpec, spec_b: ClassSpec) -> Optional[TwoColoring]:
    """First red/blue coloring (red tried first, left to right) whose red part
    lies in ``spec_a`` and blue part in ``spec_b``; None if there is none.

    Partial colorings are pruned as soon as either part leaves its class,
    which is sound because classes are closed under taking patterns.
    """
    return _search(perm, spec_a, spec_b, lr=False)


def check_lr_merge(perm: Sequence[int], spec_a: ClassSpec, spec_b: ClassSpec) -> Optional[TwoColoring]:
    """Like :func:`check_merge`, but the LR-minima go to both parts."""
    return _search(perm, spec_a, spec_b, lr=True)


def _require_av123(perm):
    hit = find_basis_occurrence(perm, AV_123)
    if hit is not None:
        raise NotInClass(f"{format_perm(perm)} contains 123", pattern=hit[0], embedding=hit[1])


def runs_decompose_av123(perm: Sequence[int]) -> list[Run]:
    """Greedy run decomposition of the non-minimal elements of a 123-avoider.

    Each run starts at the first unused non-minimal element, is anchored at
    the rightmost LR-minimum covering it, and continues while the next
    non-minimal element is still covered by that anchor. (The non-minimal
    elements decrease, so once one escapes the anchor all later ones do.)
    """
    perm = tuple(perm)
    _require_av123(perm)
    mins = lr_minima(perm)
    min_set = set(mins)
    rest = [i for i in range(1, len(perm) + 1) if i not in min_set]
    runs = []
    k = 0
    while k < len(rest):
        first = rest[k]
        anchor = max(q for q in mins if q < first and perm[q - 1] < perm[first - 1])
        members = [first]
        k += 1
        while k < len(rest) and perm[anchor - 1] < perm[rest[k] - 1]:
            members.append(rest[k])
            k += 1
        runs.append(Run(tuple(members), anchor))
    return runs


def greedy_lr_split_av123(perm: Sequence[int]) -> TwoColoring:
    """LR-merge coloring of a 123-avoider with runs alternating red, blue, ...

    Both parts avoid 463152.
    """
    perm = tuple(perm)
    colors = [BOTH] * len(perm)
    for r, run in enumerate(runs_decompose_av123(perm)):
        for p in run.members:
            colors[p - 1] = RED if r % 2 == 0 else BLUE
    return TwoColoring(perm, tuple(colors), LR_MERGE)


def _color_tree(tree: InflationTree) -> list[str]:
    skeleton_colors = greedy_lr_split_av123(tree.skeleton).colors
    if tree.is_leaf:
        return list(skeleton_colors)
    mins = lr_minima(tree.skeleton)
    children = dict(zip(mins, tree.children))
    out: list[str] = []
    for pos, c in enumerate(skeleton_colors, 1):
        if pos in children:
            out.extend(_color_tree(children[pos]))
        else:
            out.append(c)
    return out


def split_av1423_1342(perm: Sequence[int]) -> TwoColoring:
    """LR-merge coloring of a member of Av(1423, 1342) into two parts from
    the LR-closure of Av(463152).

    Built bottom-up over :func:`structure_decompose`: every skeleton gets the
    greedy 123-avoider coloring, inflated blocks keep their own coloring.
    """
    perm = tuple(perm)
    tree = structure_decompose(perm)
    return TwoColoring(perm, tuple(_color_tree(tree)), LR_MERGE)


def check_ramsey_witness(sigma: Sequence[int], tau: Sequence[int], pi: Sequence[int],
                         bound: int = RAMSEY_BOUND):
    """Does every red/blue coloring of ``sigma`` have a red ``tau`` or a blue ``pi``?

    Returns ``(True, None)`` or ``(False, coloring)`` where the coloring
    avoids both. Branches are cut as soon as a red ``tau`` or blue ``pi``
    appears among the colored prefix.
    """
    sigma, tau, pi = tuple(sigma), tuple(tau), tuple(pi)
    if len(sigma) > bound:
        raise ResourceLimit(f"|sigma| = {len(sigma)} exceeds bound {bound}")
    colors: list[str] = []
    red: list[int] = []
    blue: list[int] = []

    def place(i):
        if i == len(sigma):
            return True
        v = sigma[i]
        for c, seq, forbidden in ((RED, red, tau), (BLUE, blue, pi)):
            seq.append(v)
            if not contains(forbidden, seq):
                colors.append(c)
                if place(i + 1):
                    return True
                colors.pop()
            seq.pop()
        return False

    if not contains(tau, ()) and not contains(pi, ()) and place(0):
        return False, TwoColoring(sigma, tuple(colors), MERGE)
    return True, None
