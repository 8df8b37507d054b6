import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdmatch import (CapacitatedBipartiteGraph, GeneralGraph, max_b_matching,
                     max_general_matching)


def bmatch(left, right, caps, edges):
    return max_b_matching(CapacitatedBipartiteGraph(left, right, frozenset(edges), caps))


def brute_b(left, right, caps, edges):
    edges = sorted(edges)
    for r in range(len(edges), 0, -1):
        for sub in itertools.combinations(edges, r):
            ls = [u for u, _ in sub]
            if len(set(ls)) != len(ls):
                continue
            if all(sum(1 for _, v in sub if v == w) <= caps[w] for w in range(right)):
                return r
    return 0


def is_b_matching(res, caps):
    ls = [u for u, _ in res]
    return len(set(ls)) == len(ls) and all(
        sum(1 for _, v in res if v == w) <= c for w, c in enumerate(caps))


def test_cap_not_binding():
    assert len(bmatch(2, 1, [2], {(0, 0), (1, 0)})) == 2


def test_cap_binding():
    assert len(bmatch(3, 1, [2], {(0, 0), (1, 0), (2, 0)})) == 2


def test_four_left_two_right():
    edges = {(0, 0), (1, 0), (1, 1), (2, 1), (3, 1)}
    res = bmatch(4, 2, [1, 3], edges)
    assert len(res) == 4 and res <= edges and is_b_matching(res, [1, 3])


def test_bad_graphs_rejected():
    with pytest.raises(ValueError):
        CapacitatedBipartiteGraph(1, 1, frozenset({(0, 1)}), (1,))
    with pytest.raises(ValueError):
        GeneralGraph(2, frozenset({(1, 1)}))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5), st.integers(1, 3), st.data())
def test_b_matching_against_brute_force(left, right, data):
    caps = data.draw(st.lists(st.integers(0, 3), min_size=right, max_size=right))
    pairs = [(u, v) for u in range(left) for v in range(right)]
    edges = set(data.draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))
    res = bmatch(left, right, caps, edges)
    assert res <= edges and is_b_matching(res, caps)
    assert len(res) == brute_b(left, right, caps, edges)


def gmatch(n, edges):
    return max_general_matching(GeneralGraph(n, frozenset(edges)))


def brute_general(n, edges):
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    for r in range(n // 2, 0, -1):
        for sub in itertools.combinations(edges, r):
            vs = [x for e in sub for x in e]
            if len(set(vs)) == len(vs):
                return r
    return 0


def test_triangle():
    assert len(gmatch(3, {(0, 1), (1, 2), (0, 2)})) == 1


def test_four_cycle():
    assert len(gmatch(4, {(0, 1), (1, 2), (2, 3), (3, 0)})) == 2


def test_five_cycle_with_pendant():
    edges = {(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)}
    assert len(gmatch(6, edges)) == 3


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.data())
def test_blossom_against_brute_force(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = set(data.draw(st.lists(st.sampled_from(pairs), max_size=12))) if pairs else set()
    res = gmatch(n, edges)
    vs = [x for e in res for x in e]
    assert len(set(vs)) == len(vs) and res <= edges
    assert len(res) == brute_general(n, edges)
