from itertools import combinations

import pytest
from hypothesis import strategies as st

from linearcut import DirectedMultigraph, LinearCutInstance, reachable_from
from linearcut.generators import FIG1_EDGES, FIG1_VERTICES, fig1_instance


@pytest.fixture
def fig1():
    return fig1_instance(4)


@pytest.fixture
def E():
    return FIG1_EDGES


@pytest.fixture
def V():
    return FIG1_VERTICES


def brute_min_separator(graph, sources, sinks, forbidden=frozenset(), limit=None):
    """Smallest edge set avoiding ``forbidden`` that cuts every X->Y path,
    by plain subset enumeration; None if there is none within ``limit``."""
    pool = [e for e in range(graph.edge_count) if e not in forbidden]
    top = len(pool) if limit is None else min(limit, len(pool))
    for size in range(top + 1):
        for subset in combinations(pool, size):
            if not (reachable_from(graph, sources, subset) & set(sinks)):
                return size
    return None


@st.composite
def small_instances(draw, max_vertices=7, max_edges=12, max_k=3, with_frozen=True):
    n = draw(st.integers(2, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=max_edges))
    k = draw(st.integers(1, min(max_k, n)))
    order = draw(st.permutations(range(n)))
    cuts = sorted(draw(st.lists(st.integers(1, n - 1), min_size=k - 1, max_size=k - 1, unique=True)))
    stop = draw(st.integers(cuts[-1] + 1 if cuts else 1, n))
    bounds = [0] + cuts + [stop]
    terminals = tuple(frozenset(order[bounds[i]:bounds[i + 1]]) for i in range(k))
    frozen = frozenset()
    if with_frozen and edges:
        frozen = frozenset(draw(st.lists(st.integers(0, len(edges) - 1), max_size=2)))
    budget = draw(st.integers(0, 4))
    return LinearCutInstance(DirectedMultigraph(n, tuple(edges)), terminals, frozen, budget)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
