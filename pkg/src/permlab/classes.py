"""Finitely based permutation classes: enumeration, counting, membership."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional, Sequence

from permlab.errors import ResourceLimit, UnsupportedSpec
from permlab.inflation import in_lr_closure
from permlab.perm import Perm, avoids, contains, format_perm, parse_perm

CLOSURE_COUNT_BOUND = 10


@dataclass(frozen=True)
class ClassSpec:
    """``Av(basis)``, or its LR-closure when ``lr_closed`` is set.

    The basis is normalized on construction: members containing another
    member are dropped, since they forbid nothing new.
    """

    basis: frozenset
    lr_closed: bool = False

    def __post_init__(self):
        basis = {tuple(b) for b in self.basis}
        if any(len(b) == 0 for b in basis):
            raise ValueError("basis elements must be nonempty")
        minimal = frozenset(b for b in basis
                            if not any(c != b and contains(c, b) for c in basis))
        object.__setattr__(self, "basis", minimal)

    @property
    def sorted_basis(self) -> list[Perm]:
        return sorted(self.basis, key=lambda b: (len(b), b))

    def __str__(self) -> str:
        inner = "Av(" + ", ".join(format_perm(b, True) for b in self.sorted_basis) + ")"
        return f"LRcl({inner})" if self.lr_closed else inner


def av(*patterns, lr_closed: bool = False) -> ClassSpec:
    """``av("1423", "1342")`` or ``av((1, 2, 3))``."""
    basis = [parse_perm(p) if isinstance(p, str) else tuple(p) for p in patterns]
    return ClassSpec(frozenset(basis), lr_closed)


def _extensions(perm: Perm) -> Iterator[Perm]:
    # append each possible new last value, shifting the others up
    for v in range(1, len(perm) + 2):
        yield tuple(x + 1 if x >= v else x for x in perm) + (v,)


def enumerate_class(spec: ClassSpec, n: int) -> Iterator[Perm]:
    """Yield the length-n members of ``Av(spec.basis)`` in lexicographic order.

    Members are grown one length at a time by appending a new last entry;
    an extension containing a basis element is pruned, which is safe
    because every prefix pattern of a member is itself a member.
    """
    if spec.lr_closed:
        raise UnsupportedSpec("LR-closed classes are decided pointwise with member()")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not spec.basis:
        yield from permutations(range(1, n + 1))
        return
    basis = spec.sorted_basis
    level: list[Perm] = [()]
    for _ in range(n):
        level = sorted(ext for p in level for ext in _extensions(p)
                       if avoids(ext, basis))
    yield from level


def member(spec: ClassSpec, perm: Sequence[int], memo: Optional[dict] = None) -> bool:
    """Membership; LR-closed specs go through the closure decision procedure.

    ``memo`` may be shared across calls with the same spec.
    """
    basis = spec.sorted_basis
    if not spec.lr_closed:
        return avoids(perm, basis)
    return in_lr_closure(perm, lambda p: avoids(p, basis), memo)


def count_class(spec: ClassSpec, n: int, bound: int = CLOSURE_COUNT_BOUND) -> int:
    """Number of length-n members.

    LR-closed specs are counted by testing all of S_n, so ``n`` is capped
    by ``bound``.
    """
    if not spec.lr_closed:
        return sum(1 for _ in enumerate_class(spec, n))
    if n > bound:
        raise ResourceLimit(f"closure counting over S_{n} exceeds bound n <= {bound}")
    memo: dict = {}
    return sum(1 for p in permutations(range(1, n + 1)) if member(spec, p, memo))
