"""1-amalgamation certificates for Av(123) and Av(1423, 1342).

Two marked permutations are amalgamated into a common superpattern in
which both marks land on the same element. For 123-avoiders this is done
geometrically: both inputs are drawn on the same pair of parallel lines of
slope -1, the drawings are slid along the lines until the marks coincide,
and the union is read back. Larger members of Av(1423, 1342) are handled
by recursing through their LR-inflation structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from permlab.classes import ClassSpec, av, enumerate_class, member
from permlab.errors import MarkIsLRMinimum, NotInClass
from permlab.inflation import (AV_123, MAIN_BASIS, inflate_with_spans,
                               lr_inflate_with_spans, structure_decompose)
from permlab.perm import (Embedding, Perm, enumerate_embeddings,
                          find_basis_occurrence, format_perm, lr_minima,
                          parse_perm, standardize)

LOWER, UPPER = "lower", "upper"

AV123_SPEC = av("123")
MAIN_SPEC = av("1423", "1342")


class MarkedPermutation(NamedTuple):
    perm: Perm
    mark: int


@dataclass(frozen=True)
class AmalgamCertificate:
    sigma: Perm
    g1: Embedding
    g2: Embedding

    def swapped(self) -> "AmalgamCertificate":
        return AmalgamCertificate(self.sigma, self.g2, self.g1)

    def to_json(self) -> dict:
        return {"sigma": format_perm(self.sigma), "g1": list(self.g1), "g2": list(self.g2)}

    @classmethod
    def from_json(cls, data: dict) -> "AmalgamCertificate":
        return cls(parse_perm(data["sigma"]), tuple(data["g1"]), tuple(data["g2"]))


@dataclass(frozen=True)
class AmalgamCheck:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _is_embedding(g, pattern, host) -> bool:
    if len(g) != len(pattern):
        return False
    if any(not 1 <= p <= len(host) for p in g):
        return False
    if any(a >= b for a, b in zip(g, g[1:])):
        return False
    return standardize(host[p - 1] for p in g) == tuple(pattern)


def check_one_amalgam(cert: AmalgamCertificate, m1: MarkedPermutation,
                      m2: MarkedPermutation, spec: ClassSpec) -> AmalgamCheck:
    """Verify a certificate; the reason is one of ``BadEmbedding1``,
    ``BadEmbedding2``, ``MarksDiffer``, ``NotInClass``."""
    if not _is_embedding(cert.g1, m1.perm, cert.sigma):
        return AmalgamCheck(False, "BadEmbedding1")
    if not _is_embedding(cert.g2, m2.perm, cert.sigma):
        return AmalgamCheck(False, "BadEmbedding2")
    if cert.g1[m1.mark - 1] != cert.g2[m2.mark - 1]:
        return AmalgamCheck(False, "MarksDiffer")
    if not member(spec, cert.sigma):
        return AmalgamCheck(False, "NotInClass")
    return AmalgamCheck(True)


def preserves_lr_minima(g: Sequence[int], pattern: Sequence[int], host: Sequence[int]) -> bool:
    """Every LR-minimum of ``pattern`` is sent to an LR-minimum of ``host``."""
    host_mins = set(lr_minima(host))
    return all(g[p - 1] in host_mins for p in lr_minima(pattern))


def find_amalgam_embeddings(sigma: Sequence[int], m1: MarkedPermutation,
                            m2: MarkedPermutation):
    """First pair of embeddings of both inputs into ``sigma`` identifying the
    marks, or None."""
    by_image: dict[int, Embedding] = {}
    for e in enumerate_embeddings(m1.perm, sigma):
        by_image.setdefault(e[m1.mark - 1], e)
    if not by_image:
        return None
    for e in enumerate_embeddings(m2.perm, sigma):
        g1 = by_image.get(e[m2.mark - 1])
        if g1 is not None:
            return g1, e
    return None


def search_one_amalgam(m1: MarkedPermutation, m2: MarkedPermutation, spec: ClassSpec,
                       max_len: int) -> Optional[AmalgamCertificate]:
    """Shortest, then lexicographically first, amalgam in ``spec``."""
    if max_len < max(len(m1.perm), len(m2.perm)):
        raise ValueError("max_len is shorter than an input")
    # closures cannot be enumerated directly; filter all of S_n instead
    source = ClassSpec(frozenset()) if spec.lr_closed else spec
    memo: dict = {}
    for length in range(max(len(m1.perm), len(m2.perm)), max_len + 1):
        for sigma in enumerate_class(source, length):
            if spec.lr_closed and not member(spec, sigma, memo):
                continue
            found = find_amalgam_embeddings(sigma, m1, m2)
            if found is not None:
                return AmalgamCertificate(tuple(sigma), *found)
    return None


@dataclass(frozen=True)
class LineDrawing:
    """Points on the lines y = -x (lower) and y = -x + d (upper)."""

    d: Fraction
    points: tuple[tuple[str, Fraction], ...]

    def y(self, i: int) -> Fraction:
        line, x = self.points[i]
        return -x + (self.d if line == UPPER else 0)

    def read_back(self) -> Perm:
        order = sorted(range(len(self.points)), key=lambda i: self.points[i][1])
        return standardize(self.y(i) for i in order)

    def to_json(self) -> dict:
        def q(f):
            return f"{f.numerator}/{f.denominator}"
        return {"d": q(self.d),
                "points": [{"line": line, "x": q(x), "y": q(self.y(i))}
                           for i, (line, x) in enumerate(self.points)]}

    @classmethod
    def from_json(cls, data: dict) -> "LineDrawing":
        return cls(Fraction(data["d"]),
                   tuple((p["line"], Fraction(p["x"])) for p in data["points"]))


def _longest_path(n, edges):
    # x[q] >= x[p] + w for every (p, q, w); None if some cycle is positive
    x = [0] * n
    for _ in range(n + 1):
        changed = False
        for p, q, w in edges:
            if x[p] + w > x[q]:
                x[q] = x[p] + w
                changed = True
        if not changed:
            return x
    return None


def draw_av123(perm: Sequence[int], d: Optional[int] = None) -> LineDrawing:
    """Two-line drawing with the LR-minima on the lower line.

    x-coordinates are the least integer solution of: x grows by at least 1
    per position, and x - d*[upper] drops by at least 1 per value step.
    Any ``d`` larger than the length makes this feasible exactly for
    123-avoiders; the default is n + 1.
    """
    perm = tuple(perm)
    n = len(perm)
    if d is None:
        d = n + 1
    if d <= n:
        raise ValueError(f"line offset {d} must exceed the length {n}")
    mins = set(lr_minima(perm))
    upper = [0 if i + 1 in mins else 1 for i in range(n)]
    where = [0] * n
    for i, v in enumerate(perm):
        where[v - 1] = i
    edges = [(i, i + 1, 1) for i in range(n - 1)]
    for v in range(1, n):
        lo, hi = where[v - 1], where[v]
        edges.append((hi, lo, 1 + d * (upper[lo] - upper[hi])))
    x = _longest_path(n, edges)
    if x is None:
        hit = find_basis_occurrence(perm, AV_123)
        raise NotInClass(f"{format_perm(perm)} cannot be drawn on two lines",
                         pattern=hit and hit[0], embedding=hit and hit[1])
    return LineDrawing(Fraction(d), tuple((UPPER if u else LOWER, Fraction(xi))
                                          for u, xi in zip(upper, x)))


def _require_in(perm, basis, name):
    hit = find_basis_occurrence(perm, basis)
    if hit is not None:
        raise NotInClass(f"{format_perm(perm)} is not in {name}",
                         pattern=hit[0], embedding=hit[1])


def _require_non_minimal(m: MarkedPermutation):
    if not 1 <= m.mark <= len(m.perm):
        raise IndexError(f"mark {m.mark} out of range for length {len(m.perm)}")
    if m.mark in lr_minima(m.perm):
        raise MarkIsLRMinimum(f"mark {m.mark} of {format_perm(m.perm)} is an LR-minimum")


def lr_amalgamate_av123(m1: MarkedPermutation, m2: MarkedPermutation) -> AmalgamCertificate:
    """LR-amalgamation of two 123-avoiders over non-minimal marks.

    The result avoids 123, identifies the marks, and both embeddings send
    LR-minima to LR-minima.
    """
    m1 = MarkedPermutation(tuple(m1.perm), m1.mark)
    m2 = MarkedPermutation(tuple(m2.perm), m2.mark)
    for m in (m1, m2):
        _require_in(m.perm, AV_123, "Av(123)")
        _require_non_minimal(m)
    d = len(m1.perm) + len(m2.perm) + 1
    first = draw_av123(m1.perm, d)
    second = draw_av123(m2.perm, d)
    shift = first.points[m1.mark - 1][1] - second.points[m2.mark - 1][1]

    # all coordinates so far are integers and distinct points of one drawing
    # differ by at least 1 in x and in y, so nudging by 1/2 along the line
    # removes clashes without reordering anything
    taken_x = {x for _, x in first.points}
    taken_y = {first.y(i) for i in range(len(first.points))}
    pts = [(x, first.y(i)) for i, (_, x) in enumerate(first.points)]
    second_index = []
    for i, (line, x) in enumerate(second.points):
        if i == m2.mark - 1:
            second_index.append(m1.mark - 1)
            continue
        x = x + shift
        y = -x + (d if line == UPPER else 0)
        if x in taken_x or y in taken_y:
            x, y = x + Fraction(1, 2), y - Fraction(1, 2)
        second_index.append(len(pts))
        pts.append((x, y))

    order = sorted(range(len(pts)), key=lambda i: pts[i][0])
    rank_of = {idx: r for r, idx in enumerate(order, 1)}
    sigma = standardize(pts[i][1] for i in order)
    g1 = tuple(rank_of[i] for i in range(len(m1.perm)))
    g2 = tuple(rank_of[i] for i in second_index)
    cert = AmalgamCertificate(sigma, g1, g2)
    if not (check_one_amalgam(cert, m1, m2, AV123_SPEC)
            and preserves_lr_minima(g1, m1.perm, sigma)
            and preserves_lr_minima(g2, m2.perm, sigma)):
        raise RuntimeError(f"drawing amalgamation failed for {m1} and {m2}")
    return cert


def _span_of(spans, pos):
    for s, (a, b) in enumerate(spans, 1):
        if a <= pos <= b:
            return s
    raise IndexError(pos)


def _lr_amalgamate(m1: MarkedPermutation, m2: MarkedPermutation) -> AmalgamCertificate:
    t1 = structure_decompose(m1.perm)
    if t1.is_leaf:
        if not structure_decompose(m2.perm).is_leaf:
            return _lr_amalgamate(m2, m1).swapped()
        return lr_amalgamate_av123(m1, m2)

    alpha = t1.skeleton
    betas = [c.evaluate() for c in t1.children]
    alpha_mins = lr_minima(alpha)
    spans = lr_inflate_with_spans(alpha, betas)[1]
    s = _span_of(spans, m1.mark)
    a, b = spans[s - 1]

    if a < b:
        # mark sits inside an inflated block: amalgamate there, re-inflate
        j = alpha_mins.index(s)
        inner = _lr_amalgamate(MarkedPermutation(betas[j], m1.mark - a + 1), m2)
        new_betas = list(betas)
        new_betas[j] = inner.sigma
        sigma, new_spans = lr_inflate_with_spans(alpha, new_betas)
        g1 = []
        for q in range(1, len(m1.perm) + 1):
            sq = _span_of(spans, q)
            start = new_spans[sq - 1][0]
            offset = q - spans[sq - 1][0]
            g1.append(start - 1 + inner.g1[offset] if sq == s else start + offset)
        start = new_spans[s - 1][0]
        g2 = [start - 1 + p for p in inner.g2]
        return AmalgamCertificate(sigma, tuple(g1), tuple(g2))

    # mark is an uninflated point of the skeleton: amalgamate the skeleton,
    # then inflate the images of its LR-minima
    outer = _lr_amalgamate(MarkedPermutation(alpha, s), m2)
    assert preserves_lr_minima(outer.g1, alpha, outer.sigma)
    target = {outer.g1[p - 1]: beta for p, beta in zip(alpha_mins, betas)}
    blocks = [target.get(r, (1,)) for r in lr_minima(outer.sigma)]
    sigma, new_spans = lr_inflate_with_spans(outer.sigma, blocks)
    g1 = []
    for q in range(1, len(m1.perm) + 1):
        sq = _span_of(spans, q)
        g1.append(new_spans[outer.g1[sq - 1] - 1][0] + q - spans[sq - 1][0])
    g2 = [new_spans[r - 1][0] for r in outer.g2]
    return AmalgamCertificate(sigma, tuple(g1), tuple(g2))


def lr_amalgamate_closure(m1: MarkedPermutation, m2: MarkedPermutation) -> AmalgamCertificate:
    """LR-amalgamation within Av(1423, 1342) over non-minimal marks."""
    m1 = MarkedPermutation(tuple(m1.perm), m1.mark)
    m2 = MarkedPermutation(tuple(m2.perm), m2.mark)
    for m in (m1, m2):
        _require_in(m.perm, MAIN_BASIS, "Av(1423, 1342)")
        _require_non_minimal(m)
    return _lr_amalgamate(m1, m2)


def _inflate_minimum(m1: MarkedPermutation, m2: MarkedPermutation) -> AmalgamCertificate:
    # m1's mark is an LR-minimum: blow it up into a copy of m2's permutation
    n1 = len(m1.perm)
    blocks = [(1,)] * n1
    blocks[m1.mark - 1] = m2.perm
    sigma, spans = inflate_with_spans(m1.perm, blocks)
    start = spans[m1.mark - 1][0]
    g1 = tuple(start + m2.mark - 1 if q == m1.mark else spans[q - 1][0]
               for q in range(1, n1 + 1))
    g2 = tuple(start + i for i in range(len(m2.perm)))
    return AmalgamCertificate(sigma, g1, g2)


def one_amalgamate_av1423_1342(m1: MarkedPermutation, m2: MarkedPermutation) -> AmalgamCertificate:
    """1-amalgamation within Av(1423, 1342) for any pair of marks."""
    m1 = MarkedPermutation(tuple(m1.perm), m1.mark)
    m2 = MarkedPermutation(tuple(m2.perm), m2.mark)
    for m in (m1, m2):
        _require_in(m.perm, MAIN_BASIS, "Av(1423, 1342)")
        if not 1 <= m.mark <= len(m.perm):
            raise IndexError(f"mark {m.mark} out of range for length {len(m.perm)}")
    if m1.mark in lr_minima(m1.perm):
        return _inflate_minimum(m1, m2)
    if m2.mark in lr_minima(m2.perm):
        return _inflate_minimum(m2, m1).swapped()
    return _lr_amalgamate(m1, m2)
