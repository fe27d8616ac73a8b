"""Minimum (X, Y) edge separators avoiding undeletable edges.

Unit-capacity augmenting paths with a cardinality cap. Undeletable edges
get capacity ``cap + 1`` so that any separator through them is at least
as expensive as the cap itself; if ``cap + 1`` units of flow get through,
the query answers :data:`EXCEEDS_CAP`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .graph import DirectedMultigraph, InstanceError


@dataclass(frozen=True)
class Separator:
    edges: frozenset[int]
    size: int
    # vertices reachable from X in the final residual network
    region: frozenset[int]
    # units of flow per edge id (only nonzero entries)
    flow: tuple[tuple[int, int], ...] = ()


class _ExceedsCap:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXCEEDS_CAP"

    def __bool__(self):
        return False


EXCEEDS_CAP = _ExceedsCap()

SeparatorResult = Union[Separator, _ExceedsCap]


@dataclass(frozen=True)
class SeparatorQuery:
    graph: DirectedMultigraph
    source_side: frozenset[int]
    sink_side: frozenset[int]
    forbidden: frozenset[int] = frozenset()
    cap: int = 0
    removed: frozenset[int] = frozenset()

    def __post_init__(self):
        for name in ("source_side", "sink_side", "forbidden", "removed"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        self.graph.check_vertices(self.source_side | self.sink_side)
        self.graph.check_edges(self.forbidden | self.removed)
        if self.source_side & self.sink_side:
            raise InstanceError("source and sink sides overlap")
        if self.cap < 0:
            raise InstanceError("cap must be nonnegative")


def min_separator(query: SeparatorQuery) -> SeparatorResult:
    return _min_separator(query.graph, query.source_side, query.sink_side,
                          query.forbidden, query.cap, query.removed)


def separator(graph, sources, sinks, forbidden=frozenset(), cap=0, removed=frozenset()) -> SeparatorResult:
    """Convenience wrapper building and validating a :class:`SeparatorQuery`."""
    return min_separator(SeparatorQuery(graph, frozenset(sources), frozenset(sinks),
                                        frozenset(forbidden), cap, frozenset(removed)))


def _min_separator(graph, sources, sinks, forbidden, cap, removed) -> SeparatorResult:
    edges = graph.edges
    incident = graph.incident
    flow = [0] * len(edges)
    big = cap + 1
    roots = sorted(sources)
    value = 0

    while True:
        seen = set(roots)
        parent: dict[int, tuple[int, int]] = {}
        queue = deque(roots)
        hit = -1
        while queue and hit < 0:
            u = queue.popleft()
            for e, d in incident[u]:
                if e in removed:
                    continue
                if d > 0:
                    v = edges[e][1]
                    if flow[e] >= (big if e in forbidden else 1):
                        continue
                else:
                    v = edges[e][0]
                    if flow[e] <= 0:
                        continue
                if v in seen:
                    continue
                seen.add(v)
                parent[v] = (e, d)
                if v in sinks:
                    hit = v
                    break
                queue.append(v)
        if hit < 0:
            break
        v = hit
        while v in parent:
            e, d = parent[v]
            flow[e] += d
            v = edges[e][0] if d > 0 else edges[e][1]
        value += 1
        if value > cap:
            return EXCEEDS_CAP

    region = frozenset(seen)
    cut = frozenset(
        e for e, (u, v) in enumerate(edges)
        if u in region and v not in region and e not in removed
    )
    # every crossing edge is saturated; F edges cannot be since value <= cap
    assert not (cut & forbidden) and len(cut) == value, "max-flow/min-cut mismatch"
    return Separator(cut, value, region, tuple((e, f) for e, f in enumerate(flow) if f))


def residual_source_region(result: SeparatorResult) -> frozenset[int]:
    if not isinstance(result, Separator):
        raise ValueError("no residual region: the query exceeded its cap")
    return result.region


def disjoint_paths(graph: DirectedMultigraph, sources: Iterable[int], sinks: Iterable[int],
                   result: Separator) -> list[list[int]]:
    """Decompose the flow behind ``result`` into ``result.size`` X->Y paths.

    Paths are lists of edge ids. They share no capacity-1 edge; an
    undeletable edge may be shared by up to ``cap + 1`` of them.
    """
    sources, sinks = frozenset(sources), frozenset(sinks)
    remaining = dict(result.flow)
    out_flow: dict[int, list[int]] = {}
    for e in sorted(remaining):
        out_flow.setdefault(graph.tail(e), []).append(e)
    net = {}
    for e, f in remaining.items():
        u, v = graph.edges[e]
        net[u] = net.get(u, 0) + f
        net[v] = net.get(v, 0) - f
    # super-source supplies positive net outflow at X; super-sink absorbs at Y
    supply = {x: net.get(x, 0) for x in sorted(sources) if net.get(x, 0) > 0}
    demand = {y: -net.get(y, 0) for y in sinks if net.get(y, 0) < 0}

    def take(u):
        for e in out_flow.get(u, ()):
            if remaining.get(e, 0) > 0:
                return e
        return None

    paths = []
    for x in list(supply):
        while supply[x] > 0:
            path: list[int] = []
            pos = {x: 0}
            u = x
            while not (u in demand and demand[u] > 0):
                e = take(u)
                if e is None:
                    raise AssertionError("flow conservation violated")
                remaining[e] -= 1
                path.append(e)
                u = graph.head(e)
                if u in pos:
                    # cancel the cycle just closed; its flow was a circulation
                    path = path[:pos[u]]
                    pos = {graph.tail(p): i for i, p in enumerate(path)}
                    pos[u] = len(path)
                    continue
                pos[u] = len(path)
            demand[u] -= 1
            supply[x] -= 1
            paths.append(path)
    return paths
