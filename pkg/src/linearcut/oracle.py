"""Exhaustive ground-truth solvers for small instances.

Every problem here reduces to the same shape: a list of deletable *units*
(each unit removes one or more arcs), and a list of constraints
``(sources, targets)`` meaning no target may be reachable from any source.
Subsets of units are enumerated by size and, within a size, in
lexicographic order; the first subset satisfying every constraint wins.
Reachability for a whole batch of subsets is evaluated at once with numpy.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import DirectedMultigraph, LinearCutInstance

_BATCH = 1 << 16


class OracleRefused(RuntimeError):
    """The instance is too large to enumerate under the configured budget."""


@dataclass(frozen=True)
class OracleBudget:
    max_edges_considered: int = 20
    max_subset_size: Optional[int] = None
    work_limit: int = 1 << 22


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class OracleResult:
    cut: Optional[frozenset[int]]

    @property
    def found(self) -> bool:
        return self.cut is not None

    @property
    def size(self) -> Optional[int]:
        return None if self.cut is None else len(self.cut)


_SUFFIX = 4


def _suffix_tables(n_units: int, r: int) -> list[np.ndarray]:
    """``tables[start]``: bitmasks of every ``r``-subset of ``start..n-1``,
    in lexicographic order."""
    prev = [np.zeros(1, dtype=np.uint64) for _ in range(n_units + 1)]
    for size in range(1, r + 1):
        cur = []
        for start in range(n_units + 1):
            parts = [np.uint64(1 << i) | prev[i + 1] for i in range(start, n_units)]
            cur.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint64))
        prev = cur
    return prev


def _subset_blocks(n_units: int, size: int):
    """Yield uint64 bitmask arrays covering all ``size``-subsets of the
    units, concatenated in lexicographic order of the sorted subsets."""
    r = min(size, _SUFFIX)
    tables = _suffix_tables(n_units, r)
    pending, count = [], 0
    for prefix in combinations(range(n_units), size - r):
        start = prefix[-1] + 1 if prefix else 0
        block = tables[start]
        if not len(block):
            continue
        head = np.uint64(sum(1 << i for i in prefix))
        pending.append(block | head)
        count += len(block)
        if count >= _BATCH:
            yield np.concatenate(pending)
            pending, count = [], 0
    if pending:
        yield np.concatenate(pending)


def _pack(bits: np.ndarray) -> np.ndarray:
    pad = (-len(bits)) % 64
    if pad:
        bits = np.concatenate([bits, np.ones(pad, dtype=bool)])
    return np.packbits(bits, bitorder="little").view(np.uint64)


def _enumerate(n, arcs, arc_unit, units, constraints, max_size, budget) -> Optional[tuple]:
    units = list(units)
    if len(units) > min(budget.max_edges_considered, 64):
        raise OracleRefused(f"{len(units)} deletable edges exceed the limit of {budget.max_edges_considered}")
    top = len(units) if max_size is None else min(max_size, len(units))
    if budget.max_subset_size is not None:
        top = min(top, budget.max_subset_size)
    work = sum(comb(len(units), s) for s in range(top + 1))
    if work > budget.work_limit:
        raise OracleRefused(f"{work} subsets exceed the work limit of {budget.work_limit}")
    constraints = [(sorted(s), sorted(t)) for s, t in constraints]
    constraints = [(s, t) for s, t in constraints if s and t]
    if not constraints:
        return ()
    position = {u: i for i, u in enumerate(units)}
    # self-loops never carry reachability
    live = [(u, v, position.get(arc_unit[j])) for j, (u, v) in enumerate(arcs) if u != v]

    def check(masks: np.ndarray) -> np.ndarray:
        """Bool per mask: does deleting that subset satisfy every constraint?"""
        words = (len(masks) + 63) // 64
        dead = {}
        for i in {pos for _, _, pos in live if pos is not None}:
            dead[i] = _pack(((masks >> np.uint64(i)) & np.uint64(1)) == 0)
        ones = np.full(words, np.uint64(0xFFFFFFFFFFFFFFFF))
        ok = ones.copy()
        for sources, targets in constraints:
            reach = np.zeros((n, words), dtype=np.uint64)
            reach[sources] = ones
            while True:
                before = reach.copy()
                for u, v, pos in live:
                    step = reach[u] if pos is None else reach[u] & dead[pos]
                    reach[v] |= step
                if np.array_equal(before, reach):
                    break
            bad = np.bitwise_or.reduce(reach[targets], axis=0)
            ok &= ~bad
        return np.unpackbits(ok.view(np.uint8), bitorder="little")[:len(masks)].astype(bool)

    everything = np.array([(1 << len(units)) - 1], dtype=np.uint64)
    if not check(everything)[0]:
        return None
    for size in range(top + 1):
        for masks in _subset_blocks(len(units), size):
            ok = check(masks)
            if ok.any():
                hit = int(masks[int(np.argmax(ok))])
                return tuple(u for i, u in enumerate(units) if hit >> i & 1)
    return None


def _directed(graph: DirectedMultigraph, constraints, undeletable, removed, p, budget):
    removed = frozenset(removed)
    arcs = [uv for e, uv in enumerate(graph.edges)]
    arc_unit = list(range(graph.edge_count))
    # removed edges behave as deleted for free: encode them as dead arcs
    arcs = [(u, v) if e not in removed else (u, u) for e, (u, v) in enumerate(arcs)]
    units = [e for e in range(graph.edge_count) if e not in undeletable and e not in removed]
    hit = _enumerate(graph.vertex_count, arcs, arc_unit, units, constraints, p, budget)
    return OracleResult(None if hit is None else frozenset(hit))


def linear_constraints(terminals):
    return [(terminals[i], frozenset().union(*terminals[i + 1:])) for i in range(len(terminals) - 1)]


def multiway_constraints(terminals):
    terminals = [frozenset(t) for t in terminals]
    return [(t, frozenset().union(*(o for j, o in enumerate(terminals) if j != i)))
            for i, t in enumerate(terminals)]


def multicut_constraints(pairs):
    grouped: dict[int, set[int]] = {}
    for s, t in pairs:
        grouped.setdefault(s, set()).add(t)
    return [({s}, ts) for s, ts in sorted(grouped.items())]


def oracle_min_linear_cut(instance: LinearCutInstance, *, removed: Iterable[int] = (),
                          budget: OracleBudget = DEFAULT_BUDGET) -> OracleResult:
    """Minimum linear cut of size at most ``instance.budget``, else no cut."""
    return _directed(instance.graph, linear_constraints(instance.terminals),
                     instance.undeletable, removed, instance.budget, budget)


def oracle_min_linear_cut_size(instance: LinearCutInstance, *, removed: Iterable[int] = (),
                               budget: OracleBudget = DEFAULT_BUDGET) -> Optional[int]:
    """Unbounded minimum size (the instance budget is ignored); ``None`` if
    the undeletable edges make separation impossible."""
    res = _directed(instance.graph, linear_constraints(instance.terminals),
                    instance.undeletable, removed, None, budget)
    return res.size


def oracle_min_multiway_cut(graph, terminals: Sequence[Iterable[int]], p: Optional[int],
                            *, undeletable=frozenset(), budget: OracleBudget = DEFAULT_BUDGET) -> OracleResult:
    return _directed(graph, multiway_constraints(terminals), frozenset(undeletable), (), p, budget)


def oracle_min_multicut(graph, pairs: Sequence[tuple[int, int]], p: Optional[int],
                        *, undeletable=frozenset(), budget: OracleBudget = DEFAULT_BUDGET) -> OracleResult:
    return _directed(graph, multicut_constraints(pairs), frozenset(undeletable), (), p, budget)


def oracle_min_undirected_multiway(graph, p: Optional[int] = None,
                                   *, budget: OracleBudget = DEFAULT_BUDGET) -> OracleResult:
    """Minimum set of undirected edges separating the three terminals of an
    :class:`~linearcut.reductions.UndirectedGraph` pairwise."""
    arcs, arc_unit = [], []
    for idx, (x, y) in enumerate(graph.edges):
        arcs += [(x, y), (y, x)]
        arc_unit += [idx, idx]
    terminals = [frozenset([t]) for t in graph.terminals]
    hit = _enumerate(graph.vertex_count, arcs, arc_unit, range(len(graph.edges)),
                     multiway_constraints(terminals), p, budget)
    return OracleResult(None if hit is None else frozenset(hit))
