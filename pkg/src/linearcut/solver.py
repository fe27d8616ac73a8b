"""Branching FPT solver for LINEAR CUT and the greedy baseline.

The solver keeps the current terminal suffix, the set of deleted edges and
the set of frozen (undeletable) edges, and walks the following loop:

* nothing left to separate, or no budget left: answer directly;
* compute the minimum separator of the first terminal set from the rest;
  too large means NO, empty means drop the first set;
* otherwise pick the lowest-id edge leaving the region the first set
  reaches through frozen edges. If freezing it keeps the separator size,
  freeze it and loop; otherwise branch: delete it (budget - 1) or freeze it.

Every split along one root-to-leaf path lowers ``2 * budget - separator``
by at least one, so a path sees at most ``2p`` splits.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, asdict
from typing import Optional

from .graph import (EdgeCut, LinearCutInstance, _reach, find_violation,
                    verify_linear_cut)
from .separator import Separator, _min_separator

log = logging.getLogger(__name__)


@dataclass
class SolverStats:
    branch_splits_total: int = 0
    max_splits_on_any_root_to_leaf_path: int = 0
    separator_calls: int = 0
    freeze_events: int = 0
    recursion_depth_max: int = 0
    leaves: int = 0
    audit_checks: int = 0
    audit_violations: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class SolveResult:
    cut: Optional[EdgeCut]
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def found(self) -> bool:
        return self.cut is not None

    @property
    def size(self) -> Optional[int]:
        return None if self.cut is None else len(self.cut)


class BranchEdgeMissing(AssertionError):
    """No edge leaves the frozen region although the separator is nonzero."""


def pick_branch_edge(graph, first, frozen, removed=frozenset()) -> int:
    """Lowest-id edge outside ``frozen``/``removed`` whose tail the first
    terminal set reaches through frozen edges and whose head it does not."""
    region = _reach(graph, first, removed, frozen)
    best = None
    for u in region:
        for e in graph.out_edges[u]:
            if e in frozen or e in removed:
                continue
            if graph.edges[e][1] not in region and (best is None or e < best):
                best = e
    if best is None:
        raise BranchEdgeMissing("no deletable edge leaves the frozen region")
    return best


class _Search:
    def __init__(self, instance: LinearCutInstance, audit: bool, audit_edge_limit: int):
        self.graph = instance.graph
        self.terminals = instance.terminals
        self.stats = SolverStats()
        self.audit = audit
        self.audit_edge_limit = audit_edge_limit

    def separator(self, idx, frozen, removed, cap):
        self.stats.separator_calls += 1
        rest = frozenset().union(*self.terminals[idx + 1:])
        return _min_separator(self.graph, self.terminals[idx], rest, frozen, cap, removed)

    def leaf(self, splits, answer):
        s = self.stats
        s.leaves += 1
        s.max_splits_on_any_root_to_leaf_path = max(s.max_splits_on_any_root_to_leaf_path, splits)
        return answer

    def run(self, idx, frozen, removed, p, splits=0, known=None) -> Optional[frozenset[int]]:
        g = self.graph
        self.stats.recursion_depth_max = max(self.stats.recursion_depth_max, splits)
        while True:
            if idx >= len(self.terminals):
                return self.leaf(splits, frozenset())
            if p <= 0:
                ok = find_violation(g, self.terminals[idx:], removed) is None
                return self.leaf(splits, frozenset() if ok else None)

            sep = known if known is not None else self.separator(idx, frozen, removed, p)
            known = None
            if not isinstance(sep, Separator):
                return self.leaf(splits, None)
            if sep.size == 0:
                idx += 1
                continue

            e = pick_branch_edge(g, self.terminals[idx], frozen, removed)
            if e not in sep.edges:
                # sep already avoids e, so freezing e keeps the minimum
                frozen_sep = sep
            else:
                frozen_sep = self.separator(idx, frozen | {e}, removed, p)
            if isinstance(frozen_sep, Separator) and frozen_sep.size == sep.size:
                self.stats.freeze_events += 1
                if self.audit:
                    self._audit(idx, frozen, removed, e)
                frozen = frozen | {e}
                known = frozen_sep
                continue

            self.stats.branch_splits_total += 1
            found = self.run(idx, frozen, removed | {e}, p - 1, splits + 1)
            if found is not None:
                return found | {e}
            return self.run(idx, frozen | {e}, removed, p, splits + 1, known=frozen_sep)

    def _audit(self, idx, frozen, removed, e):
        from .oracle import OracleRefused, oracle_min_linear_cut_size

        deletable = self.graph.edge_count - len(frozen | removed)
        if deletable > self.audit_edge_limit:
            return
        sub = LinearCutInstance(self.graph, self.terminals[idx:], frozen, 0)
        try:
            before = oracle_min_linear_cut_size(sub, removed=removed)
            after = oracle_min_linear_cut_size(
                LinearCutInstance(self.graph, self.terminals[idx:], frozen | {e}, 0),
                removed=removed)
        except OracleRefused:
            return
        self.stats.audit_checks += 1
        if before != after:
            self.stats.audit_violations += 1
            log.error("freeze of edge %d changed the optimum: %s -> %s", e, before, after)


def solve_linear_cut(instance: LinearCutInstance, *, audit: bool = False,
                     audit_edge_limit: int = 16) -> SolveResult:
    """Find a linear cut of size at most ``instance.budget`` avoiding the
    undeletable edges, or report that none exists (``cut is None``).

    With ``audit=True`` every freeze event on a sub-instance with at most
    ``audit_edge_limit`` deletable edges is cross-checked by brute force;
    mismatches are counted in ``stats.audit_violations``.
    """
    search = _Search(instance, audit, audit_edge_limit)
    cut = search.run(0, instance.undeletable, frozenset(), instance.budget)
    if cut is not None and not verify_linear_cut(instance, cut):
        raise AssertionError(f"solver produced an invalid cut {sorted(cut)}")
    return SolveResult(None if cut is None else frozenset(cut), search.stats)


def minimum_linear_cut(instance: LinearCutInstance, max_budget: Optional[int] = None) -> SolveResult:
    """Smallest cut found by raising the budget from 0 until the solver succeeds."""
    limit = instance.graph.edge_count if max_budget is None else max_budget
    result = SolveResult(None)
    for p in range(limit + 1):
        result = solve_linear_cut(instance.with_budget(p))
        if result.found:
            return result
    return result


def greedy_linear_cut(instance: LinearCutInstance) -> Optional[EdgeCut]:
    """Separate ``T_1`` from everything later, then ``T_2``, and so on,
    each time with a minimum separator in the graph left so far.

    Returns ``None`` only when undeletable edges make separation impossible.
    The budget is ignored.
    """
    g = instance.graph
    chosen: frozenset[int] = frozenset()
    for i in range(instance.k - 1):
        rest = frozenset().union(*instance.terminals[i + 1:])
        sep = _min_separator(g, instance.terminals[i], rest, instance.undeletable,
                             g.edge_count, chosen)
        if not isinstance(sep, Separator):
            return None
        chosen |= sep.edges
    return chosen
