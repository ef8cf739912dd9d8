"""Count table for the classes that appear in the splitting results.

    python3 scripts/count_classes.py --max-n 8

Av(1423, 1342) and the LR-closure of Av(123) should agree term by term
(large Schroeder numbers); Av(123) gives the Catalan numbers.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from permlab.classes import av, count_class


@dataclass
class CountConfig:
    max_n: int = 8
    closure_max_n: int = 7  # closures are counted by scanning S_n


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=CountConfig.max_n)
    parser.add_argument("--closure-max-n", type=int, default=CountConfig.closure_max_n)
    args = parser.parse_args()
    cfg = CountConfig(args.max_n, args.closure_max_n)

    rows = [
        av("123"),
        av("1423", "1342"),
        av("123", lr_closed=True),
        av("463152"),
        av("463152", lr_closed=True),
    ]
    print(f"{'class':<24}" + "".join(f"{n:>9}" for n in range(1, cfg.max_n + 1)) + "   secs")
    for spec in rows:
        top = cfg.closure_max_n if spec.lr_closed else cfg.max_n
        t0 = time.perf_counter()
        counts = [count_class(spec, n, bound=top) for n in range(1, top + 1)]
        cells = "".join(f"{c:>9}" for c in counts) + " " * 9 * (cfg.max_n - top)
        print(f"{str(spec):<24}{cells}   {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
