"""Instance transformations between the cut problems.

* lattice -> multicut: read the forbidden ordered pairs off the poset;
* multicut -> lattice: wrap each pair in ``p + 1``-fold parallel gadgets so
  that the new terminals stay glued to the old ones under any ``p`` deletions;
* undirected 3-terminal multiway cut -> linear cut: five-arc gadget per edge;
* directed multiway cut 2-approximation from two linear cuts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import (DirectedMultigraph, InstanceError, LinearCutInstance,
                    _reach, check_terminal_sets, verify_multiway_cut)
from .solver import SolveResult, SolverStats, solve_linear_cut


@dataclass(frozen=True)
class Poset:
    """Strict order on elements ``0..size-1``; ``greater`` holds ``(a, b)``
    for ``a > b`` and is transitively closed on construction."""

    size: int
    greater: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        rel = {(int(a), int(b)) for a, b in self.greater}
        for a, b in rel:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise InstanceError(f"poset relation {a} > {b} names a missing element")
        # Floyd-Warshall closure; posets here have a handful of elements
        above = [[(a, b) in rel for b in range(self.size)] for a in range(self.size)]
        for m in range(self.size):
            for a in range(self.size):
                if above[a][m]:
                    row_m = above[m]
                    row_a = above[a]
                    for b in range(self.size):
                        if row_m[b]:
                            row_a[b] = True
        closed = frozenset((a, b) for a in range(self.size) for b in range(self.size) if above[a][b])
        if any(a == b for a, b in closed):
            raise InstanceError("poset relation has a cycle")
        object.__setattr__(self, "greater", closed)

    def ge(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.greater

    @classmethod
    def chain(cls, size: int) -> "Poset":
        """``size - 1 > ... > 1 > 0``."""
        return cls(size, frozenset((b + 1, b) for b in range(size - 1)))


def poset_is_chain(poset: Poset) -> bool:
    return all(poset.ge(a, b) or poset.ge(b, a)
               for a in range(poset.size) for b in range(a + 1, poset.size))


def poset_is_antichain(poset: Poset) -> bool:
    return not poset.greater


@dataclass(frozen=True)
class LatticeInstance:
    graph: DirectedMultigraph
    poset: Poset
    label: tuple[tuple[int, int], ...]  # sorted (vertex, element)

    def __post_init__(self):
        label = tuple(sorted((int(v), int(x)) for v, x in dict(self.label).items()))
        object.__setattr__(self, "label", label)
        self.graph.check_vertices(v for v, _ in label)
        used = {x for _, x in label}
        if used != set(range(self.poset.size)):
            raise InstanceError("label map must be onto the poset elements")

    @property
    def terminals(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.label)

    @property
    def labels(self) -> dict[int, int]:
        return dict(self.label)


@dataclass(frozen=True)
class MulticutInstance:
    graph: DirectedMultigraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(s), int(t)) for s, t in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for s, t in pairs:
            self.graph.check_vertices((s, t))
            if s == t:
                raise InstanceError(f"pair ({s}, {t}) has identical endpoints")


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph with exactly three distinct terminals."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    terminals: tuple[int, int, int]

    def __post_init__(self):
        edges = tuple((int(x), int(y)) for x, y in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "terminals", tuple(int(t) for t in self.terminals))
        if len(self.terminals) != 3 or len(set(self.terminals)) != 3:
            raise InstanceError("exactly three distinct terminals are required")
        seen = set()
        for x, y in edges:
            if not (0 <= x < self.vertex_count and 0 <= y < self.vertex_count):
                raise InstanceError(f"edge {{{x}, {y}}} references a missing vertex")
            if x == y:
                raise InstanceError(f"self-loop at {x}")
            key = frozenset((x, y))
            if key in seen:
                raise InstanceError(f"duplicate edge {{{x}, {y}}}")
            seen.add(key)
        for t in self.terminals:
            if not 0 <= t < self.vertex_count:
                raise InstanceError(f"terminal {t} does not exist")


def verify_undirected_multiway(graph: UndirectedGraph, cut: Iterable[int]) -> bool:
    cut = frozenset(cut)
    arcs = []
    for idx, (x, y) in enumerate(graph.edges):
        arcs += [(x, y) if idx not in cut else (x, x), (y, x) if idx not in cut else (y, y)]
    g = DirectedMultigraph(graph.vertex_count, arcs)
    s, t, u = graph.terminals
    return verify_multiway_cut(g, [{s}, {t}, {u}], ())


def lattice_to_multicut(inst: LatticeInstance) -> MulticutInstance:
    label = inst.labels
    pairs = tuple((x, y) for x in inst.terminals for y in inst.terminals
                  if x != y and not inst.poset.ge(label[x], label[y]))
    return MulticutInstance(inst.graph, pairs)


def verify_multicut(inst: MulticutInstance, cut: Iterable[int]) -> bool:
    cut = frozenset(cut)
    inst.graph.check_edges(cut)
    by_source: dict[int, set[int]] = {}
    for s, t in inst.pairs:
        by_source.setdefault(s, set()).add(t)
    return all(not (_reach(inst.graph, {s}, cut) & ts) for s, ts in by_source.items())


def verify_lattice_cut(inst: LatticeInstance, cut: Iterable[int]) -> bool:
    cut = frozenset(cut)
    inst.graph.check_edges(cut)
    label = inst.labels
    terminals = set(inst.terminals)
    for x in inst.terminals:
        for y in _reach(inst.graph, {x}, cut) & terminals:
            if y != x and not inst.poset.ge(label[x], label[y]):
                return False
    return True


@dataclass(frozen=True)
class LatticeGadget:
    """Output of :func:`multicut_to_lattice` with the bookkeeping the
    construction implies (new node ids per pair)."""

    instance: LatticeInstance
    source_hubs: tuple[int, ...]   # a_i
    sink_hubs: tuple[int, ...]     # b_i
    added_vertices: int


def multicut_to_lattice(inst: MulticutInstance, p: int) -> LatticeGadget:
    if p < 0:
        raise InstanceError("budget must be nonnegative")
    g = inst.graph
    n = g.vertex_count
    edges = list(g.edges)
    a_ids, b_ids = [], []
    for s, t in inst.pairs:
        a = n
        n += 1
        for _ in range(p + 1):
            c = n
            n += 1
            edges += [(a, c), (c, s)]
        b = n
        n += 1
        for _ in range(p + 1):
            d = n
            n += 1
            edges += [(t, d), (d, b)]
        a_ids.append(a)
        b_ids.append(b)
    k = len(inst.pairs)
    # element i is a_i, element k + i is b_i
    greater = frozenset((i, k + j) for i in range(k) for j in range(k) if i != j)
    label = tuple((a, i) for i, a in enumerate(a_ids)) + tuple((b, k + i) for i, b in enumerate(b_ids))
    names = g.names + tuple(f"x{v}" for v in range(g.vertex_count, n)) if g.names else ()
    lattice = LatticeInstance(DirectedMultigraph(n, tuple(edges), names), Poset(2 * k, greater), label)
    return LatticeGadget(lattice, tuple(a_ids), tuple(b_ids), n - g.vertex_count)


def linear_to_lattice(inst: LinearCutInstance) -> LatticeInstance:
    """Chain encoding: members of ``T_i`` get element ``i - 1``, ordered
    upward, so only higher-indexed sets may reach lower-indexed ones."""
    label = tuple((v, i) for i, t in enumerate(inst.terminals) for v in t)
    return LatticeInstance(inst.graph, Poset.chain(inst.k), label)


def lattice_to_linear(inst: LatticeInstance, budget: int = 0) -> LinearCutInstance:
    if not poset_is_chain(inst.poset):
        raise InstanceError("only chain posets map onto linear cut")
    rank = {x: sum(inst.poset.ge(x, y) for y in range(inst.poset.size)) for x in range(inst.poset.size)}
    order = sorted(range(inst.poset.size), key=rank.__getitem__)
    label = inst.labels
    terminals = tuple(frozenset(v for v in inst.terminals if label[v] == x) for x in order)
    return LinearCutInstance(inst.graph, terminals, frozenset(), budget)


def linear_to_multicut(inst: LinearCutInstance) -> MulticutInstance:
    pairs = tuple((x, y) for i, ti in enumerate(inst.terminals) for tj in inst.terminals[i + 1:]
                  for x in sorted(ti) for y in sorted(tj))
    return MulticutInstance(inst.graph, pairs)


def umultiway_to_linear(graph: UndirectedGraph, budget: int = 0) -> LinearCutInstance:
    """Each undirected edge ``{x, y}`` becomes ``x -> a, y -> a, a -> b,
    b -> y, b -> x`` with fresh ``a = n + 2i``, ``b = n + 2i + 1``; edge
    ``5i + 2`` is the middle arc of gadget ``i``."""
    n = graph.vertex_count
    edges = []
    for i, (x, y) in enumerate(graph.edges):
        a, b = n + 2 * i, n + 2 * i + 1
        edges += [(x, a), (y, a), (a, b), (b, y), (b, x)]
    g = DirectedMultigraph(n + 2 * len(graph.edges), tuple(edges))
    s, t, u = graph.terminals
    return LinearCutInstance(g, (frozenset([s]), frozenset([t]), frozenset([u])), frozenset(), budget)


def gadget_cut_to_undirected(cut: Iterable[int]) -> frozenset[int]:
    return frozenset(e // 5 for e in cut)


@dataclass
class ApproxResult:
    cut: Optional[frozenset[int]]
    forward: SolveResult
    backward: SolveResult

    @property
    def found(self) -> bool:
        return self.cut is not None

    @property
    def stats(self) -> SolverStats:
        return self.forward.stats


def multiway_two_approx(graph: DirectedMultigraph, terminals: Sequence[Iterable[int]], p: int,
                        undeletable: Iterable[int] = frozenset()) -> ApproxResult:
    """Union of a linear cut for ``T_1..T_k`` and one for ``T_k..T_1``.

    Each linear cut is at most the optimal multiway cut, so when a multiway
    cut of size ``p`` exists the union is within a factor of two; if either
    side fails at budget ``p``, no multiway cut of size ``p`` exists.
    """
    terminals = tuple(frozenset(t) for t in terminals)
    check_terminal_sets(graph, terminals)
    F = frozenset(undeletable)
    fwd = solve_linear_cut(LinearCutInstance(graph, terminals, F, p))
    bwd = solve_linear_cut(LinearCutInstance(graph, terminals[::-1], F, p))
    if not (fwd.found and bwd.found):
        return ApproxResult(None, fwd, bwd)
    cut = fwd.cut | bwd.cut
    assert verify_multiway_cut(graph, terminals, cut)
    return ApproxResult(cut, fwd, bwd)
