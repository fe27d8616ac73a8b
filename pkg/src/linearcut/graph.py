"""Directed multigraph substrate: reachability and cut verification.

Vertices are dense integers ``0..n-1``. Edge ids are positional: the i-th
edge handed to the constructor has id ``i``. Every loop in the package
that has to break a tie does so by ascending edge id.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

EdgeCut = frozenset  # frozenset[int] of edge ids


class InstanceError(ValueError):
    """Raised for malformed graphs, instances or id references."""


@dataclass(frozen=True)
class DirectedMultigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InstanceError("vertex_count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InstanceError(f"edge {e} ({u}->{v}) references a missing vertex")
        if self.names and len(self.names) != self.vertex_count:
            raise InstanceError("names must cover every vertex")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def tail(self, e: int) -> int:
        return self.edges[e][0]

    def head(self, e: int) -> int:
        return self.edges[e][1]

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            if u != v:
                out[u].append(e)
        return tuple(tuple(x) for x in out)

    @cached_property
    def incident(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, ``(edge, +1)`` for out-edges and ``(edge, -1)`` for
        in-edges, merged in ascending edge id. Self-loops are omitted."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                continue
            inc[u].append((e, 1))
            inc[v].append((e, -1))
        return tuple(tuple(x) for x in inc)

    def name(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def vertex_id(self, name: str) -> int:
        if self.names and name in self.names:
            return self.names.index(name)
        return int(name)

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not (0 <= v < self.vertex_count):
                raise InstanceError(f"vertex {v} does not exist")

    def check_edges(self, edge_ids: Iterable[int]) -> None:
        for e in edge_ids:
            if not (0 <= e < self.edge_count):
                raise InstanceError(f"edge {e} does not exist")


def reachable_from(
    graph: DirectedMultigraph,
    sources: Iterable[int],
    removed: Iterable[int] = frozenset(),
    restrict_to: Optional[Iterable[int]] = None,
) -> frozenset[int]:
    """Vertices reachable from ``sources`` using edges not in ``removed``
    (and, if given, only edges in ``restrict_to``). Sources are included."""
    sources = frozenset(sources)
    removed = frozenset(removed)
    graph.check_vertices(sources)
    graph.check_edges(removed)
    if restrict_to is not None:
        restrict_to = frozenset(restrict_to)
        graph.check_edges(restrict_to)
    return _reach(graph, sources, removed, restrict_to)


def _reach(graph, sources, removed, restrict_to=None) -> frozenset[int]:
    # unchecked variant for inner loops
    seen = set(sources)
    queue = deque(sorted(sources))
    out_edges, edges = graph.out_edges, graph.edges
    while queue:
        u = queue.popleft()
        for e in out_edges[u]:
            if e in removed or (restrict_to is not None and e not in restrict_to):
                continue
            v = edges[e][1]
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


@dataclass(frozen=True)
class LinearCutInstance:
    """Graph, ordered terminal sets ``T_1..T_k``, undeletable edges and budget."""

    graph: DirectedMultigraph
    terminals: tuple[frozenset[int], ...]
    undeletable: frozenset[int] = frozenset()
    budget: int = 0

    def __post_init__(self):
        terminals = tuple(frozenset(int(v) for v in t) for t in self.terminals)
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "undeletable", frozenset(self.undeletable))
        check_terminal_sets(self.graph, terminals)
        self.graph.check_edges(self.undeletable)
        if self.budget < 0:
            raise InstanceError("budget must be nonnegative")

    @property
    def k(self) -> int:
        return len(self.terminals)

    def with_budget(self, budget: int) -> "LinearCutInstance":
        return LinearCutInstance(self.graph, self.terminals, self.undeletable, budget)


def check_terminal_sets(graph: DirectedMultigraph, terminals: Sequence[frozenset[int]]) -> None:
    seen: set[int] = set()
    for i, t in enumerate(terminals, 1):
        if not t:
            raise InstanceError(f"terminal set {i} is empty")
        graph.check_vertices(t)
        if seen & t:
            raise InstanceError(f"terminal set {i} overlaps an earlier set at {sorted(seen & t)}")
        seen |= t


def find_violation(graph, terminals, removed, symmetric=False) -> Optional[tuple[int, int]]:
    """First ordered pair ``(i, j)`` (0-based) with ``T_j`` reachable from
    ``T_i`` after deleting ``removed``; ``j > i`` unless ``symmetric``."""
    for i, source in enumerate(terminals):
        reach = _reach(graph, source, removed)
        for j, target in enumerate(terminals):
            if j == i or (j < i and not symmetric):
                continue
            if reach & target:
                return i, j
    return None


def verify_linear_cut(instance: LinearCutInstance, cut: Iterable[int], *, enforce_budget: bool = True) -> bool:
    cut = frozenset(cut)
    instance.graph.check_edges(cut)
    if cut & instance.undeletable:
        return False
    if enforce_budget and len(cut) > instance.budget:
        return False
    return find_violation(instance.graph, instance.terminals, cut) is None


def verify_multiway_cut(graph: DirectedMultigraph, terminals: Sequence[Iterable[int]], cut: Iterable[int]) -> bool:
    cut = frozenset(cut)
    graph.check_edges(cut)
    terminals = [frozenset(t) for t in terminals]
    for t in terminals:
        graph.check_vertices(t)
    return find_violation(graph, terminals, cut, symmetric=True) is None
