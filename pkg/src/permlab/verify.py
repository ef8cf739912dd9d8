"""Exhaustive verification suites (the acceptance criteria, runnable).

Each suite returns a :class:`SuiteResult`; ``run_suites`` runs several,
optionally in worker processes (capped by ``PERMLAB_THREADS``).
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from itertools import permutations
from typing import Callable, Optional

from permlab import oracle
from permlab.amalgamation import (MAIN_SPEC, AmalgamCertificate,
                                  MarkedPermutation, check_one_amalgam,
                                  draw_av123, find_amalgam_embeddings, lr_amalgamate_av123,
                                  one_amalgamate_av1423_1342,
                                  preserves_lr_minima)
from permlab.classes import av, count_class, enumerate_class
from permlab.errors import NotInClass
from permlab.inflation import (AV_123, MAIN_BASIS, in_lr_closure, inflate,
                               lr_closure_member, lr_inflate)
from permlab.perm import avoids, contains, find_embedding, lr_minima
from permlab.splitting import (BOTH, LR_MERGE, TwoColoring, check_merge,
                               greedy_lr_split_av123,
                               runs_decompose_av123, split_av1423_1342)

MAX_FAILURES = 20
P463152 = (4, 6, 3, 1, 5, 2)


@dataclass
class SuiteResult:
    name: str
    description: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(msg)
        elif len(self.failures) == MAX_FAILURES:
            self.failures.append("... further failures suppressed")

    def check(self, ok: bool, msg: str) -> None:
        self.checked += 1
        if not ok:
            self.fail(msg)

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.description} ({self.checked} checks, {len(self.failures)} failures)"


def _all_perms(max_n):
    for n in range(1, max_n + 1):
        yield from permutations(range(1, n + 1))


def _class_members(basis, max_n):
    spec = av(*basis)
    for n in range(1, max_n + 1):
        yield from enumerate_class(spec, n)


def suite_structure(max_n: int = 9) -> SuiteResult:
    res = SuiteResult("structure", f"Av(1423,1342) == LRcl(Av(123)) on S_n, n <= {max_n}")
    base = lambda p: avoids(p, AV_123)
    memo: dict = {}
    for p in _all_perms(max_n):
        res.check(avoids(p, MAIN_BASIS) == in_lr_closure(p, base, memo), f"mismatch at {p}")
    return res


def suite_greedy(max_n: int = 10) -> SuiteResult:
    res = SuiteResult("greedy-split", f"greedy runs split Av(123) into Av(463152) parts, n <= {max_n}")
    for p in _class_members(AV_123, max_n):
        c = greedy_lr_split_av123(p)
        both = tuple(i for i, x in enumerate(c.colors, 1) if x == BOTH)
        res.check(both == lr_minima(p)
                  and not contains(P463152, c.red_part())
                  and not contains(P463152, c.blue_part()), f"bad split of {p}")
    return res


def suite_split(max_n: int = 8) -> SuiteResult:
    res = SuiteResult("split", f"Av(1423,1342) splits into LRcl(Av(463152)) parts, n <= {max_n}")
    base = lambda p: not contains(P463152, p)
    memo: dict = {}
    for p in _class_members(MAIN_BASIS, max_n):
        c = split_av1423_1342(p)
        res.check(c.mode == LR_MERGE
                  and lr_closure_member(c.red_part(), base, memo) is not None
                  and lr_closure_member(c.blue_part(), base, memo) is not None,
                  f"bad split of {p}")
    res.check(avoids(P463152, MAIN_BASIS) and lr_closure_member(P463152, base) is None,
              "463152 should be a class member outside LRcl(Av(463152))")
    return res


def _marked(perms):
    for p in perms:
        for i in range(1, len(p) + 1):
            yield MarkedPermutation(tuple(p), i)


def suite_amalgamate(max_n: int = 4, brute_n: int = 3, brute_len: int = 8) -> SuiteResult:
    res = SuiteResult("amalgamate",
                      f"1-amalgamation in Av(1423,1342), lengths <= {max_n}, "
                      f"brute cross-check <= {brute_n}")
    marked = list(_marked(_class_members(MAIN_BASIS, max_n)))
    for m1 in marked:
        for m2 in marked:
            cert = one_amalgamate_av1423_1342(m1, m2)
            verdict = check_one_amalgam(cert, m1, m2, MAIN_SPEC)
            res.check(bool(verdict) and len(cert.sigma) <= len(m1.perm) + len(m2.perm) - 1,
                      f"{m1} + {m2}: {verdict.reason or 'too long'}")
            if len(m1.perm) <= brute_n and len(m2.perm) <= brute_n:
                shortest = oracle.brute_min_amalgam(m1, m2, MAIN_SPEC, brute_len)
                res.check(shortest is not None and shortest <= len(cert.sigma),
                          f"{m1} + {m2}: oracle minimum {shortest} vs {len(cert.sigma)}")
    return res


def suite_draw(max_n: int = 8, bad_n: int = 6) -> SuiteResult:
    res = SuiteResult("draw", f"two-line drawings round-trip on Av(123), n <= {max_n}; "
                              f"rejected off Av(123), n <= {bad_n}")
    for p in _class_members(AV_123, max_n):
        res.check(draw_av123(p).read_back() == p, f"read-back differs for {p}")
    for p in _all_perms(bad_n):
        if avoids(p, AV_123):
            continue
        try:
            draw_av123(p)
        except NotInClass:
            res.check(True, "")
        else:
            res.check(False, f"{p} was drawn although it contains 123")
    return res


def _any_amalgam(sigma, p1, p2, spec):
    # some mark pair and embeddings witnessing sigma as an amalgam
    for i in range(1, len(p1) + 1):
        for j in range(1, len(p2) + 1):
            m1, m2 = MarkedPermutation(p1, i), MarkedPermutation(p2, j)
            found = find_amalgam_embeddings(sigma, m1, m2)
            if found and check_one_amalgam(AmalgamCertificate(sigma, *found), m1, m2, spec):
                yield m1, m2, found


def suite_examples() -> SuiteResult:
    res = SuiteResult("examples", "worked examples reproduce exactly")
    res.check(inflate((2, 4, 1, 3), [(2, 1, 3), (1,), (2, 1), (1, 2)]) == (4, 3, 5, 8, 2, 1, 6, 7),
              "inflation 2413[213,1,21,12]")
    res.check(lr_inflate((2, 4, 1, 3), [(2, 1, 3), (2, 1)]) == (4, 3, 5, 7, 2, 1, 6),
              "LR-inflation 2413<213,21>")
    merge462153 = TwoColoring((4, 6, 2, 1, 5, 3), ("*", "R", "*", "*", "B", "R"), LR_MERGE)
    res.check(merge462153.red_part() == (4, 5, 2, 1, 3) and merge462153.blue_part() == (3, 2, 1, 4),
              "LR-merge 462153 of 45213 and 3214")
    res.check(any(True for _ in _any_amalgam((3, 2, 7, 5, 4, 1, 6), (1, 4, 2, 3), (2, 4, 3, 1), av())),
              "3275416 amalgamates 1423 and 2431")
    runs = runs_decompose_av123((7, 9, 6, 3, 8, 5, 4, 1, 2))
    res.check(len(runs) == 3, "796385412 splits into three runs")
    sigma = (5, 3, 2, 6, 1, 4)
    lr_ok = any(preserves_lr_minima(g1, m1.perm, sigma) and preserves_lr_minima(g2, m2.perm, sigma)
                and m1.mark not in lr_minima(m1.perm) and m2.mark not in lr_minima(m2.perm)
                for m1, m2, (g1, g2) in _any_amalgam(sigma, (3, 1, 4, 2), (2, 3, 1), av("123")))
    res.check(lr_ok, "532614 is an LR-amalgamation of 3142 and 231")
    built = lr_amalgamate_av123(MarkedPermutation((3, 1, 4, 2), 3), MarkedPermutation((2, 3, 1), 2))
    res.check(built.sigma == sigma, "drawing construction yields 532614")
    return res


def _golden_counts() -> dict[int, int]:
    text = resources.files("permlab").joinpath("data/av123_counts.txt").read_text()
    return {int(a): int(b) for a, b in (line.split() for line in text.splitlines() if line.strip())}


def suite_oracle(random_pairs: int = 10_000, exhaustive_n: int = 7, merge_n: int = 8,
                 seed: int = 0) -> SuiteResult:
    res = SuiteResult("oracle", "fast paths agree with brute-force references")
    rng = random.Random(seed)
    for _ in range(random_pairs):
        n = rng.randint(1, 10)
        k = rng.randint(1, min(n, 6))
        host = tuple(rng.sample(range(1, n + 1), n))
        pat = tuple(rng.sample(range(1, k + 1), k))
        res.check(contains(pat, host) == oracle.brute_contains(pat, host), f"contains({pat}, {host})")

    patterns = [p for p in _all_perms(min(5, exhaustive_n))]
    for host in _all_perms(exhaustive_n):
        found = oracle.brute_patterns(host)
        for pat in patterns:
            if len(pat) > len(host):
                continue
            res.check(contains(pat, host) == (pat in found), f"contains({pat}, {host})")
        for pat in found:
            if len(pat) > 5:
                res.check(find_embedding(pat, host) is not None, f"contains({pat}, {host})")

    closure = av("463152", lr_closed=True)
    for p in _class_members(MAIN_BASIS, merge_n):
        res.check((check_merge(p, closure, closure) is not None)
                  == oracle.brute_merge(p, closure, closure), f"merge of {p}")

    golden = _golden_counts()
    for n, expected in sorted(golden.items()):
        res.check(count_class(av("123"), n) == expected == len(oracle.brute_class([(1, 2, 3)], n)),
                  f"|Av_{n}(123)| != {expected}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "structure": suite_structure,
    "greedy-split": suite_greedy,
    "split": suite_split,
    "amalgamate": suite_amalgamate,
    "draw": suite_draw,
    "examples": suite_examples,
    "oracle": suite_oracle,
}


def _run_one(args) -> SuiteResult:
    name, max_n = args
    fn = SUITES[name]
    if max_n is None or name in ("examples", "oracle"):
        return fn()
    return fn(max_n=max_n)


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("PERMLAB_THREADS", "1")))
    except ValueError:
        return 1


def run_suites(names, max_n: Optional[int] = None, threads: Optional[int] = None) -> list[SuiteResult]:
    """Run the named suites; results come back in the order requested."""
    jobs = [(name, max_n) for name in names]
    threads = thread_cap() if threads is None else threads
    if threads <= 1 or len(jobs) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
        return list(pool.map(_run_one, jobs))
