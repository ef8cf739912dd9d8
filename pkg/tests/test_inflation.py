from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from permlab import oracle
from permlab.classes import av, enumerate_class
from permlab.errors import ArityError, NotInClass
from permlab.inflation import (InflationTree, find_lr_block, in_lr_closure,
                               inflate, is_lr_simple, is_simple, lr_closure_member,
                               lr_inflate, structure_decompose)
from permlab.perm import avoids, contains, lr_minima

from conftest import perms

AV123 = lambda p: avoids(p, [(1, 2, 3)])


def inflate_by_definition(skeleton, blocks):
    # search S_N for the one permutation meeting both defining conditions
    n = sum(len(b) for b in blocks)
    cuts = [0]
    for b in blocks:
        cuts.append(cuts[-1] + len(b))
    hits = []
    for cand in permutations(range(1, n + 1)):
        segs = [cand[cuts[i]:cuts[i + 1]] for i in range(len(blocks))]
        if any(oracle._std(s) != tuple(b) for s, b in zip(segs, blocks)):
            continue
        if all(max(segs[i]) < min(segs[j])
               for i in range(len(blocks)) for j in range(len(blocks))
               if skeleton[i] < skeleton[j]):
            hits.append(cand)
    assert len(hits) == 1
    return hits[0]


def test_inflate_examples():
    assert inflate((2, 4, 1, 3), [(2, 1, 3), (1,), (2, 1), (1, 2)]) == (4, 3, 5, 8, 2, 1, 6, 7)
    assert inflate((2, 4, 1, 3), [(1,)] * 4) == (2, 4, 1, 3)
    assert inflate((1,), [(3, 1, 2)]) == (3, 1, 2)
    assert inflate((2, 1), [(1, 2), (1, 2)]) == (3, 4, 1, 2)
    with pytest.raises(ArityError):
        inflate((2, 1), [(1,)])


@pytest.mark.parametrize("skeleton, blocks", [
    ((2, 1), [(1, 2), (1, 2)]),
    ((2, 4, 1, 3), [(2, 1, 3), (1,), (2, 1), (1, 2)]),
    ((3, 1, 2), [(1,), (2, 1, 3), (1, 2)]),
])
def test_inflate_matches_definition(skeleton, blocks):
    assert inflate(skeleton, blocks) == inflate_by_definition(skeleton, blocks)


@settings(max_examples=100)
@given(st.data())
def test_inflate_random_against_definition(data):
    skeleton = data.draw(perms(1, 3))
    blocks = [data.draw(perms(1, 3)) for _ in skeleton]
    if sum(map(len, blocks)) <= 7:
        assert inflate(skeleton, blocks) == inflate_by_definition(skeleton, blocks)


@settings(max_examples=100)
@given(st.data())
def test_inflation_composes(data):
    skeleton = data.draw(perms(1, 4))
    blocks = [data.draw(perms(1, 3)) for _ in skeleton]
    once = inflate(skeleton, blocks)
    assert inflate(once, [(1,)] * len(once)) == once
    assert inflate((1,), [once]) == once
    # inflating block by block gives the same permutation
    inner = [inflate(b, [(1,)] * len(b)) for b in blocks]
    assert inflate(skeleton, inner) == once


def test_lr_inflate_examples():
    p = lr_inflate((2, 4, 1, 3), [(2, 1, 3), (2, 1)])
    assert p == (4, 3, 5, 7, 2, 1, 6)
    assert lr_inflate((2, 4, 1, 3), [(1,), (1,)]) == (2, 4, 1, 3)
    # 213 and 21 each have two LR-minima, so the result has four
    assert lr_minima(p) == (1, 2, 5, 6)
    assert [p[i - 1] for i in lr_minima(p)] == [4, 3, 2, 1]
    with pytest.raises(ArityError):
        lr_inflate((2, 4, 1, 3), [(1,)])


@given(st.data())
def test_lr_minima_add_up(data):
    alpha = data.draw(perms(1, 5))
    betas = [data.draw(perms(1, 5)) for _ in lr_minima(alpha)]
    result = lr_inflate(alpha, betas)
    assert len(lr_minima(result)) == sum(len(lr_minima(b)) for b in betas)


def test_find_lr_block_examples():
    block = find_lr_block((4, 3, 5, 7, 2, 1, 6))
    assert (block.start, block.end, block.low, block.high) == (1, 3, 3, 5)
    assert find_lr_block((4, 6, 3, 1, 5, 2)) is None
    assert find_lr_block((2, 1)) is None


def _nontrivial_lr_inflations(max_n):
    found = set()
    for m in range(2, max_n):
        for alpha in permutations(range(1, m + 1)):
            k = len(lr_minima(alpha))
            for sizes in product(range(1, max_n - m + 2), repeat=k):
                if m - k + sum(sizes) > max_n or all(s == 1 for s in sizes):
                    continue
                for betas in product(*[list(permutations(range(1, s + 1))) for s in sizes]):
                    found.add(lr_inflate(alpha, betas))
    return found


def test_lr_block_characterization_against_all_decompositions():
    inflatable = _nontrivial_lr_inflations(7)
    for n in range(2, 8):
        for p in permutations(range(1, n + 1)):
            assert is_lr_simple(p) == (p not in inflatable), p


def test_simplicity():
    assert is_lr_simple((4, 6, 3, 1, 5, 2))
    assert not is_lr_simple((4, 3, 5, 7, 2, 1, 6))
    assert is_simple((2, 4, 1, 3))
    assert is_simple((1,))
    assert not is_simple((1, 2, 3))
    for n in range(1, 7):
        for p in permutations(range(1, n + 1)):
            if is_simple(p):
                assert is_lr_simple(p)


def test_lr_closure_member_examples():
    assert lr_closure_member((4, 6, 3, 1, 5, 2), lambda p: not contains((4, 6, 3, 1, 5, 2), p)) is None
    tree = lr_closure_member((4, 3, 5, 7, 2, 1, 6), AV123)
    assert tree == InflationTree((2, 4, 1, 3), (InflationTree((2, 1, 3)), InflationTree((2, 1))))
    assert tree.evaluate() == (4, 3, 5, 7, 2, 1, 6)


@pytest.mark.parametrize("basis", [[(1, 2, 3)], [(3, 2, 1)], [(2, 3, 1)], [(2, 4, 1, 3)], [(1, 3, 2), (2, 1, 3)]])
def test_closure_membership_matches_oracle(basis):
    base = lambda p: avoids(p, basis)
    memo, tree_memo, oracle_memo = {}, {}, {}
    for n in range(1, 8):
        for p in permutations(range(1, n + 1)):
            expected = oracle.brute_lr_closure_member(p, base, oracle_memo)
            assert in_lr_closure(p, base, memo) == expected
            tree = lr_closure_member(p, base, tree_memo)
            assert (tree is not None) == expected
            if tree is not None:
                assert tree.evaluate() == p
                assert all(base(s) for s in tree.skeletons())


def test_closure_of_av123_is_main_class_to_eight():
    memo = {}
    for n in range(1, 9):
        for p in permutations(range(1, n + 1)):
            assert in_lr_closure(p, AV123, memo) == avoids(p, [(1, 4, 2, 3), (1, 3, 4, 2)])


def test_structure_decompose_examples():
    assert structure_decompose((7, 9, 6, 3, 8, 5, 4, 1, 2)).is_leaf
    tree = structure_decompose((4, 3, 5, 7, 2, 1, 6))
    assert tree.evaluate() == (4, 3, 5, 7, 2, 1, 6)
    assert all(avoids(s, [(1, 2, 3)]) for s in tree.skeletons())
    with pytest.raises(NotInClass) as info:
        structure_decompose((1, 4, 2, 3))
    assert info.value.embedding == (1, 2, 3, 4)


def test_structure_decompose_handles_points_below_last_element():
    tree = structure_decompose((1, 2, 4, 3))
    assert tree.skeleton == (1, 3, 2)
    assert tree.evaluate() == (1, 2, 4, 3)


def test_structure_decompose_round_trip():
    spec = av("1423", "1342")
    for n in range(1, 10):
        for p in enumerate_class(spec, n):
            tree = structure_decompose(p)
            assert tree.evaluate() == p
            assert all(avoids(s, [(1, 2, 3)]) for s in tree.skeletons())


def test_tree_json_round_trip():
    tree = structure_decompose((4, 3, 5, 7, 2, 1, 6))
    data = tree.to_json()
    assert data == {"skeleton": "2413", "children": [
        {"skeleton": "213", "children": []}, {"skeleton": "21", "children": []}]}
    assert InflationTree.from_json(data) == tree
    with pytest.raises(ArityError):
        InflationTree.from_json({"skeleton": "2413", "children": [{"skeleton": "1"}]})
