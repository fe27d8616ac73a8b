import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linearcut import (EXCEEDS_CAP, DirectedMultigraph, InstanceError, Separator,
                       SeparatorQuery, disjoint_paths, min_separator, reachable_from,
                       residual_source_region, separator)

from conftest import brute_min_separator, small_instances


def sides(inst):
    return inst.terminals[0], frozenset().union(*inst.terminals[1:])


def test_disconnected_sides():
    g = DirectedMultigraph(3, ((1, 0), (2, 1)))
    res = separator(g, {0}, {2}, cap=0)
    assert res == Separator(frozenset(), 0, reachable_from(g, {0}), ())
    assert residual_source_region(res) == reachable_from(g, {0})


def test_fig1_sizes(fig1, E, V):
    g = fig1.graph
    first = separator(g, {V["t0"]}, {V["t1"], V["t2"]}, cap=5)
    assert first.size == 3
    assert first.edges == {E["a"], E["b"], E["c"]}
    assert residual_source_region(first) == {V["t0"]}
    assert separator(g, {V["t1"]}, {V["t2"]}, cap=5).size == 2


def test_fig1_with_frozen_a(fig1, E, V):
    g = fig1.graph
    expected = brute_min_separator(g, {0}, {1, 2}, {E["a"]}, limit=5)
    res = separator(g, {V["t0"]}, {V["t1"], V["t2"]}, {E["a"]}, cap=5)
    assert res.size == expected == 4


def test_cap_reached(fig1):
    assert separator(fig1.graph, {0}, {1, 2}, cap=2) is EXCEEDS_CAP
    assert separator(fig1.graph, {0}, {1, 2}, cap=3).size == 3


def test_frozen_path_exceeds_any_cap():
    g = DirectedMultigraph(2, ((0, 1),))
    assert separator(g, {0}, {1}, {0}, cap=3) is EXCEEDS_CAP


def test_region_after_exceeds_is_an_error():
    with pytest.raises(ValueError):
        residual_source_region(EXCEEDS_CAP)


def test_query_validation():
    g = DirectedMultigraph(2, ((0, 1),))
    with pytest.raises(InstanceError):
        SeparatorQuery(g, frozenset({0}), frozenset({0}))
    with pytest.raises(InstanceError):
        SeparatorQuery(g, frozenset({0}), frozenset({1}), cap=-1)


def test_parallel_edges_count_separately():
    g = DirectedMultigraph(2, ((0, 1), (0, 1), (0, 1)))
    assert separator(g, {0}, {1}, cap=5).size == 3


@given(small_instances(max_edges=11))
@settings(max_examples=200, deadline=None)
def test_matches_brute_force(inst):
    x, y = sides(inst)
    if not y:
        return
    cap = inst.budget
    res = separator(inst.graph, x, y, inst.undeletable, cap)
    expected = brute_min_separator(inst.graph, x, y, inst.undeletable, limit=cap)
    if expected is None:
        assert res is EXCEEDS_CAP
        return
    assert isinstance(res, Separator) and res.size == expected
    assert not res.edges & inst.undeletable
    assert not reachable_from(inst.graph, x, res.edges) & y


@given(small_instances(max_edges=14))
@settings(max_examples=200, deadline=None)
def test_region_and_menger_certificate(inst):
    x, y = sides(inst)
    if not y:
        return
    res = separator(inst.graph, x, y, inst.undeletable, inst.budget)
    if res is EXCEEDS_CAP:
        return
    region = residual_source_region(res)
    assert x <= region and not region & y
    crossing = {e for e, (u, v) in enumerate(inst.graph.edges) if u in region and v not in region}
    assert crossing == res.edges
    paths = disjoint_paths(inst.graph, x, y, res)
    assert len(paths) == res.size
    used = [e for p in paths for e in p if e not in inst.undeletable]
    assert len(used) == len(set(used))
    for p in paths:
        assert inst.graph.tail(p[0]) in x and inst.graph.head(p[-1]) in y
        assert all(inst.graph.head(a) == inst.graph.tail(b) for a, b in zip(p, p[1:]))
        assert len(set(p) & res.edges) == 1


@given(small_instances(max_edges=14), st.data())
@settings(max_examples=150, deadline=None)
def test_frozen_monotone(inst, data):
    x, y = sides(inst)
    if not y or not inst.graph.edge_count:
        return
    extra = data.draw(st.integers(0, inst.graph.edge_count - 1))
    base = separator(inst.graph, x, y, inst.undeletable, inst.budget)
    more = separator(inst.graph, x, y, inst.undeletable | {extra}, inst.budget)
    if base is EXCEEDS_CAP:
        assert more is EXCEEDS_CAP
    elif more is not EXCEEDS_CAP:
        assert more.size >= base.size


def test_deterministic_on_repeat():
    rng = random.Random(7)
    edges = tuple((rng.randrange(9), rng.randrange(9)) for _ in range(30))
    g = DirectedMultigraph(9, edges)
    q = SeparatorQuery(g, frozenset({0, 1}), frozenset({7, 8}), frozenset({3}), 6)
    first = min_separator(q)
    assert all(min_separator(q) == first for _ in range(5))
    g2 = DirectedMultigraph(9, edges)
    assert min_separator(SeparatorQuery(g2, q.source_side, q.sink_side, q.forbidden, q.cap)) == first


def test_removed_edges_are_ignored(fig1, E):
    res = separator(fig1.graph, {0}, {1, 2}, cap=5, removed={E["a"]})
    assert res.size == 2 and E["a"] not in res.edges
