"""How long are the constructed 1-amalgams compared with the shortest ones?

    python3 scripts/amalgamation_sweep.py --max-n 3 --max-len 7

For every ordered pair of marked members of Av(1423, 1342) the constructive
certificate is compared with the exhaustive minimum. Prints a histogram of
(constructed length - minimum length).
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from permlab.amalgamation import (MAIN_SPEC, MarkedPermutation, check_one_amalgam,
                                  one_amalgamate_av1423_1342, search_one_amalgam)
from permlab.classes import enumerate_class


@dataclass
class SweepConfig:
    max_n: int = 3
    max_len: int = 7


def marked_members(max_n):
    for n in range(1, max_n + 1):
        for p in enumerate_class(MAIN_SPEC, n):
            for k in range(1, n + 1):
                yield MarkedPermutation(p, k)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    parser.add_argument("--max-len", type=int, default=SweepConfig.max_len)
    args = parser.parse_args()
    cfg = SweepConfig(args.max_n, args.max_len)

    ms = list(marked_members(cfg.max_n))
    excess: Counter = Counter()
    worst = None
    for m1 in ms:
        for m2 in ms:
            cert = one_amalgamate_av1423_1342(m1, m2)
            assert check_one_amalgam(cert, m1, m2, MAIN_SPEC)
            best = search_one_amalgam(m1, m2, MAIN_SPEC, cfg.max_len)
            gap = len(cert.sigma) - len(best.sigma)
            excess[gap] += 1
            if worst is None or gap > worst[0]:
                worst = (gap, m1, m2, cert.sigma, best.sigma)
    print(f"{len(ms) ** 2} ordered pairs of marked permutations, lengths <= {cfg.max_n}")
    for gap in sorted(excess):
        print(f"  excess {gap}: {excess[gap]}")
    if worst:
        gap, m1, m2, built, best = worst
        print(f"largest excess {gap}: {m1} + {m2} -> {built} (shortest {best})")


if __name__ == "__main__":
    main()
