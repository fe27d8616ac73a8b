import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linearcut.generators import FIG1_TEXT, fig1_file, random_linear, random_multicut, random_undirected3
from linearcut.io import (InstanceFile, ParseError, format_cut, instance_digest, parse_cut,
                          parse_instance, serialize_instance, to_file)
from linearcut.reductions import multicut_to_lattice


def test_fig1_parses(E):
    f = fig1_file()
    assert f.kind == "linear" and f.vertices == 7 and len(f.edges) == 14
    assert f.terminal_sets == [(0,), (1,), (2,)]
    assert f.edges[E["d"]] == (4, 1) and f.edges[E["h"]] == (1, 4)
    assert f.names[0] == "t0"


def test_empty_graph_is_k0():
    f = parse_instance("kind linear\nvertices 0\n")
    inst = f.to_linear()
    assert inst.k == 0 and inst.graph.edge_count == 0


@pytest.mark.parametrize("text, lineno", [
    ("kind linear\nvertices 3\nterminalset 1 3\n", 3),
    ("kind linear\nvertices 3\nbudget 1\nbudget 2\n", 4),
    ("kind linear\nvertices 3\nfrobnicate 1\n", 3),
    ("kind linear\nvertices 3\nedge 0 x\n", 3),
    ("kind square\n", 1),
    ("edge 0 1\n", 1),
    ("kind linear\nvertices 2\nterminalset 1 0\nterminalset 1 1\n", 4),
])
def test_malformed_lines(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.lineno == lineno


def test_gap_in_terminal_indices():
    with pytest.raises(ParseError):
        parse_instance("kind linear\nvertices 3\nterminalset 2 0\n")


def test_self_loop_kept_with_warning(caplog):
    f = parse_instance("kind linear\nvertices 2\nedge 0 0\nedge 0 1\n")
    assert f.edges == [(0, 0), (0, 1)]
    assert "self-loop" in caplog.text


def test_comments_and_blank_lines():
    f = parse_instance("# hello\n\nkind multicut  # trailing\nvertices 2\npair 0 1 # x\n")
    assert f.pairs == [(0, 1)]


@given(st.integers(0, 10 ** 6), st.integers(2, 12), st.integers(0, 30), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_roundtrip_random_linear(seed, n, m, k):
    f = random_linear(seed, n, m, min(k, n), 2, budget=seed % 5)
    once = parse_instance(serialize_instance(f))
    assert once == f
    assert parse_instance(serialize_instance(once)) == once


@pytest.mark.parametrize("seed", range(10))
def test_roundtrip_other_kinds(seed):
    mc = random_multicut(seed, 5, 8, 2)
    for obj in (mc, multicut_to_lattice(mc, 1).instance, random_undirected3(seed, 6, 7)):
        f = to_file(obj, budget=1)
        again = parse_instance(serialize_instance(f))
        assert again == parse_instance(serialize_instance(again))
        assert again.kind == f.kind


def test_fig1_roundtrip_keeps_names():
    f = fig1_file()
    assert parse_instance(serialize_instance(f)) == f


def test_digest_stable():
    a = instance_digest(fig1_file())
    b = instance_digest(parse_instance(FIG1_TEXT + "\n# trailing comment\n"))
    assert a == b and len(a) == 64


def test_cut_files():
    assert parse_cut("# size 2\n3\n\n5 # e\n") == {3, 5}
    assert parse_cut(format_cut({5, 3}, "hdr")) == {3, 5}
    with pytest.raises(ParseError):
        parse_cut("3 4\n")


def test_random_generator_reproducible():
    a = serialize_instance(random_linear(11, 10, 20, 3, 2))
    assert a == serialize_instance(random_linear(11, 10, 20, 3, 2))
    assert a != serialize_instance(random_linear(12, 10, 20, 3, 2))
    f = random_linear(11, 10, 20, 3, 2)
    flat = [v for t in f.terminal_sets for v in t]
    assert len(flat) == len(set(flat))
    assert all(u != v for u, v in f.edges)
