"""Canonical and seeded random instances.

Random digraphs are Erdős–Rényi-style arc samples: each of the ``m`` arcs
picks a uniform tail and a uniform different head, with replacement, so
parallel arcs can occur. Terminal vertices are drawn without replacement,
which keeps terminal sets disjoint. Everything goes through
``random.Random(seed)`` and is reproducible across runs and platforms.
"""
from __future__ import annotations

import random
from itertools import combinations

from .graph import DirectedMultigraph, LinearCutInstance
from .io import InstanceFile, parse_instance
from .reductions import MulticutInstance, UndirectedGraph

FIG1_TEXT = """\
# Three terminals where separating t0 first and t1 second costs 5
# although 4 edges (d, e, f, g) suffice.
kind linear
vertices 7
name 0 t0
name 1 t1
name 2 t2
name 3 top
name 4 left
name 5 right
name 6 bottom
edge 0 4   # a
edge 0 3   # b
edge 0 5   # c
edge 4 1   # d
edge 6 1   # e
edge 6 2   # f
edge 5 2   # g
edge 1 4   # h
edge 1 6   # i
edge 3 4
edge 3 5
edge 4 6
edge 5 6
edge 6 5
terminalset 1 0
terminalset 2 1
terminalset 3 2
"""

# edge label -> id in FIG1_TEXT
FIG1_EDGES = {name: i for i, name in enumerate("abcdefghi")}
FIG1_VERTICES = {"t0": 0, "t1": 1, "t2": 2, "top": 3, "left": 4, "right": 5, "bottom": 6}


def fig1_file() -> InstanceFile:
    return parse_instance(FIG1_TEXT)


def fig1_instance(budget: int = 0) -> LinearCutInstance:
    return fig1_file().to_linear(budget)


def _arcs(rng: random.Random, n: int, m: int) -> list[tuple[int, int]]:
    if n < 2:
        return []
    arcs = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        arcs.append((u, v + (v >= u)))
    return arcs


def random_terminal_sets(rng: random.Random, n: int, k: int, max_set_size: int = 1) -> list[tuple[int, ...]]:
    sizes = [rng.randint(1, max_set_size) for _ in range(k)]
    while sum(sizes) > n and max(sizes) > 1:
        sizes[sizes.index(max(sizes))] -= 1
    if sum(sizes) > n:
        raise ValueError(f"cannot place {k} disjoint terminal sets on {n} vertices")
    picked = rng.sample(range(n), sum(sizes))
    out, pos = [], 0
    for s in sizes:
        out.append(tuple(sorted(picked[pos:pos + s])))
        pos += s
    return out


def random_linear(seed: int, n: int, m: int, k: int, max_set_size: int = 1,
                  budget: int = 0, kind: str = "linear") -> InstanceFile:
    rng = random.Random(seed)
    arcs = _arcs(rng, n, m)
    sets = random_terminal_sets(rng, n, k, max_set_size)
    return InstanceFile(kind, n, edges=arcs, terminal_sets=sets, budget=budget)


def random_multicut(seed: int, n: int, m: int, pairs: int) -> MulticutInstance:
    rng = random.Random(seed)
    arcs = _arcs(rng, n, m)
    chosen = []
    for _ in range(pairs):
        s = rng.randrange(n)
        t = rng.randrange(n - 1)
        chosen.append((s, t + (t >= s)))
    return MulticutInstance(DirectedMultigraph(n, tuple(arcs)), tuple(chosen))


def random_undirected3(seed: int, n: int, m: int) -> UndirectedGraph:
    rng = random.Random(seed)
    all_pairs = list(combinations(range(n), 2))
    edges = rng.sample(all_pairs, min(m, len(all_pairs)))
    terminals = rng.sample(range(n), 3)
    return UndirectedGraph(n, tuple(edges), tuple(terminals))
