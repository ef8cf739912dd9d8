from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from permlab import oracle
from permlab.amalgamation import (AV123_SPEC, MAIN_SPEC, AmalgamCertificate, LineDrawing,
                                  MarkedPermutation as M, check_one_amalgam, draw_av123,
                                  find_amalgam_embeddings, lr_amalgamate_av123,
                                  lr_amalgamate_closure, one_amalgamate_av1423_1342,
                                  preserves_lr_minima, search_one_amalgam)
from permlab.classes import av, enumerate_class
from permlab.errors import MarkIsLRMinimum, NotInClass
from permlab.perm import complement, contains, identity, lr_minima, reverse

from conftest import perms


def marked(spec, max_n, non_minimal=False):
    for n in range(1, max_n + 1):
        for p in enumerate_class(spec, n):
            mins = lr_minima(p)
            for k in range(1, n + 1):
                if not (non_minimal and k in mins):
                    yield M(p, k)


def test_check_reasons():
    m1, m2 = M((2, 1), 1), M((1, 2), 2)
    good = AmalgamCertificate((2, 3, 1), (2, 3), (1, 2))
    assert check_one_amalgam(good, m1, m2, av())
    assert check_one_amalgam(AmalgamCertificate((2, 3, 1), (1, 2), (1, 2)), m1, m2, av()).reason == "BadEmbedding1"
    assert check_one_amalgam(AmalgamCertificate((2, 3, 1), (2, 3), (2, 3)), m1, m2, av()).reason == "BadEmbedding2"
    assert check_one_amalgam(good, m1, M((1, 2), 1), av()).reason == "MarksDiffer"
    assert check_one_amalgam(good, m1, m2, av("231")).reason == "NotInClass"
    assert check_one_amalgam(AmalgamCertificate((2, 3, 1), (3, 2), (1, 2)), m1, m2, av()).reason == "BadEmbedding1"


def test_trivial_amalgam_of_a_perm_with_itself():
    p = (3, 1, 4, 2)
    for k in range(1, 5):
        cert = AmalgamCertificate(p, (1, 2, 3, 4), (1, 2, 3, 4))
        assert check_one_amalgam(cert, M(p, k), M(p, k), MAIN_SPEC)


def test_3275416_amalgamates_1423_and_2431():
    sigma = (3, 2, 7, 5, 4, 1, 6)
    hits = [(i, j) for i, j in product(range(1, 5), repeat=2)
            if find_amalgam_embeddings(sigma, M((1, 4, 2, 3), i), M((2, 4, 3, 1), j))]
    assert hits


def test_drawing_amalgam_of_3142_and_231():
    m1, m2 = M((3, 1, 4, 2), 3), M((2, 3, 1), 2)
    cert = lr_amalgamate_av123(m1, m2)
    assert cert.sigma == (5, 3, 2, 6, 1, 4)
    assert check_one_amalgam(cert, m1, m2, AV123_SPEC)
    assert preserves_lr_minima(cert.g1, m1.perm, cert.sigma)
    assert preserves_lr_minima(cert.g2, m2.perm, cert.sigma)
    best = search_one_amalgam(m1, m2, AV123_SPEC, 6)
    assert best is not None and len(best.sigma) <= 6


def test_search_examples():
    single = search_one_amalgam(M((1,), 1), M((2, 1), 2), av(), 3)
    assert single.sigma == (2, 1)
    assert search_one_amalgam(M((1, 2), 1), M((1, 2), 1), av("123"), 3).sigma == (1, 2)
    # the top of one 12 on the bottom of another always makes a 123
    assert search_one_amalgam(M((1, 2), 2), M((1, 2), 1), av("123"), 5) is None
    with pytest.raises(ValueError):
        search_one_amalgam(M((1, 2), 1), M((1,), 1), av(), 1)


def test_av231_amalgams_against_oracle():
    spec = av("231")
    ms = list(marked(spec, 3))
    for m1 in ms:
        for m2 in ms:
            cert = search_one_amalgam(m1, m2, spec, 6)
            expected = oracle.brute_min_amalgam(m1, m2, spec, 6)
            assert (cert is None) == (expected is None)
            if cert is not None:
                assert len(cert.sigma) == expected
                assert check_one_amalgam(cert, m1, m2, spec)


def test_draw_small_examples():
    drawing = draw_av123((2, 1))
    assert drawing.d == 3
    assert [x for _, x in drawing.points] == [0, 1]
    drawing = draw_av123((3, 1, 4, 2))
    assert [line for line, _ in drawing.points] == ["lower", "lower", "upper", "upper"]
    assert drawing.read_back() == (3, 1, 4, 2)
    with pytest.raises(NotInClass) as info:
        draw_av123((1, 2, 3))
    assert info.value.pattern == (1, 2, 3)
    with pytest.raises(ValueError):
        draw_av123((2, 1), d=2)


def test_draw_is_geometrically_sound():
    for n in range(1, 9):
        for p in enumerate_class(AV123_SPEC, n):
            drawing = draw_av123(p)
            xs = [x for _, x in drawing.points]
            ys = [drawing.y(i) for i in range(n)]
            assert len(set(xs)) == n and len(set(ys)) == n
            assert xs == sorted(xs)
            assert drawing.read_back() == p
            lower = tuple(i for i, (line, _) in enumerate(drawing.points, 1) if line == "lower")
            assert lower == lr_minima(p)


@settings(max_examples=100, deadline=None)
@given(perms(1, 9))
def test_draw_accepts_exactly_av123(p):
    if contains((1, 2, 3), p):
        with pytest.raises(NotInClass):
            draw_av123(p)
    else:
        assert draw_av123(p, d=len(p) + 5).read_back() == p


def test_drawing_json_roundtrip():
    drawing = draw_av123((5, 3, 2, 6, 1, 4))
    again = LineDrawing.from_json(drawing.to_json())
    assert again == drawing
    assert drawing.to_json()["d"] == "7/1"
    half = LineDrawing(Fraction(3), (("lower", Fraction(1, 2)),))
    assert LineDrawing.from_json(half.to_json()) == half


def test_lr_amalgamate_av123_exhaustive():
    ms = list(marked(AV123_SPEC, 5, non_minimal=True))
    for m1 in ms:
        for m2 in ms:
            cert = lr_amalgamate_av123(m1, m2)
            assert check_one_amalgam(cert, m1, m2, AV123_SPEC)
            assert preserves_lr_minima(cert.g1, m1.perm, cert.sigma)
            assert preserves_lr_minima(cert.g2, m2.perm, cert.sigma)
            assert len(cert.sigma) <= len(m1.perm) + len(m2.perm) - 1


def test_lr_amalgamate_rejects_minimal_marks_and_outsiders():
    with pytest.raises(MarkIsLRMinimum):
        lr_amalgamate_av123(M((3, 1, 4, 2), 2), M((2, 3, 1), 2))
    with pytest.raises(NotInClass):
        lr_amalgamate_av123(M((1, 2, 3), 2), M((2, 3, 1), 2))
    with pytest.raises(NotInClass):
        lr_amalgamate_closure(M((1, 4, 2, 3), 2), M((2, 3, 1), 2))


def test_lr_amalgamate_closure_examples():
    big = (4, 3, 5, 7, 2, 1, 6)
    for k in range(1, 8):
        if k in lr_minima(big):
            continue
        m1, m2 = M(big, k), M((2, 3, 1), 2)
        cert = lr_amalgamate_closure(m1, m2)
        assert check_one_amalgam(cert, m1, m2, MAIN_SPEC)
        assert preserves_lr_minima(cert.g1, big, cert.sigma)
        assert preserves_lr_minima(cert.g2, m2.perm, cert.sigma)
    ms = list(marked(MAIN_SPEC, 4, non_minimal=True))
    for m1 in ms:
        for m2 in ms:
            cert = lr_amalgamate_closure(m1, m2)
            assert check_one_amalgam(cert, m1, m2, MAIN_SPEC)
            assert preserves_lr_minima(cert.g1, m1.perm, cert.sigma)
            assert preserves_lr_minima(cert.g2, m2.perm, cert.sigma)


def test_one_amalgamate_examples():
    cert = one_amalgamate_av1423_1342(M((2, 1), 1), M((1, 2), 2))
    assert cert.sigma == (2, 3, 1)
    assert (cert.g1, cert.g2) == ((2, 3), (1, 2))
    with pytest.raises(IndexError):
        one_amalgamate_av1423_1342(M((2, 1), 3), M((1, 2), 2))
    with pytest.raises(NotInClass):
        one_amalgamate_av1423_1342(M((1, 3, 4, 2), 1), M((1,), 1))


def _rc_cert(cert):
    n = len(cert.sigma)
    flip = lambda g: tuple(n + 1 - q for q in reversed(g))
    return AmalgamCertificate(complement(reverse(cert.sigma)), flip(cert.g1), flip(cert.g2))


def test_symmetric_class_via_reverse_complement():
    target = av("2314", "3124")
    ms = list(marked(MAIN_SPEC, 3))
    for m1 in ms:
        for m2 in ms:
            cert = _rc_cert(one_amalgamate_av1423_1342(m1, m2))
            r1 = M(complement(reverse(m1.perm)), len(m1.perm) + 1 - m1.mark)
            r2 = M(complement(reverse(m2.perm)), len(m2.perm) + 1 - m2.mark)
            assert check_one_amalgam(cert, r1, r2, target)


def test_certificate_json_roundtrip():
    cert = one_amalgamate_av1423_1342(M((3, 1, 4, 2), 3), M((2, 3, 1), 2))
    assert AmalgamCertificate.from_json(cert.to_json()) == cert
    assert cert.swapped().swapped() == cert
    assert identity(0) == ()
