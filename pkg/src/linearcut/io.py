"""Line-oriented instance files and cut files.

Grammar (``#`` starts a comment, tokens are whitespace separated)::

    kind <linear|lattice|multicut|multiway|undirected3>
    vertices <n>
    name <vertex> <label>            # optional display name
    edge <tail> <head>               # ids 0, 1, 2, ... in file order
    terminalset <i> <v> <v> ...      # linear / multiway / undirected3, i = 1..k
    pair <s> <t>                     # multicut
    poset-gt <a> <b>                 # lattice: a > b
    label <vertex> <element>         # lattice
    undeletable <edge-id> ...
    budget <p>
"""
from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import DirectedMultigraph, InstanceError, LinearCutInstance
from .reductions import (LatticeInstance, MulticutInstance, Poset,
                         UndirectedGraph)

log = logging.getLogger(__name__)

KINDS = ("linear", "lattice", "multicut", "multiway", "undirected3")


class ParseError(InstanceError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


@dataclass
class InstanceFile:
    kind: str
    vertices: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    names: dict[int, str] = field(default_factory=dict)
    terminal_sets: list[tuple[int, ...]] = field(default_factory=list)
    pairs: list[tuple[int, int]] = field(default_factory=list)
    poset_gt: list[tuple[int, int]] = field(default_factory=list)
    labels: list[tuple[int, int]] = field(default_factory=list)
    undeletable: tuple[int, ...] = ()
    budget: Optional[int] = None

    # -- conversions -------------------------------------------------------
    def graph(self) -> DirectedMultigraph:
        names = ()
        if self.names:
            names = tuple(self.names.get(v, str(v)) for v in range(self.vertices))
        return DirectedMultigraph(self.vertices, tuple(self.edges), names)

    def to_linear(self, budget: Optional[int] = None) -> LinearCutInstance:
        if self.kind not in ("linear", "multiway"):
            raise InstanceError(f"a {self.kind} file is not a linear cut instance")
        p = budget if budget is not None else self.budget
        return LinearCutInstance(self.graph(), tuple(frozenset(t) for t in self.terminal_sets),
                                 frozenset(self.undeletable), 0 if p is None else p)

    def to_multicut(self) -> MulticutInstance:
        return MulticutInstance(self.graph(), tuple(self.pairs))

    def to_lattice(self) -> LatticeInstance:
        elements = [x for _, x in self.labels] + [x for ab in self.poset_gt for x in ab]
        size = max(elements, default=-1) + 1
        return LatticeInstance(self.graph(), Poset(size, frozenset(self.poset_gt)), tuple(self.labels))

    def to_undirected(self) -> UndirectedGraph:
        if len(self.terminal_sets) != 3 or any(len(t) != 1 for t in self.terminal_sets):
            raise InstanceError("undirected3 needs three singleton terminal sets")
        return UndirectedGraph(self.vertices, tuple(self.edges), tuple(t[0] for t in self.terminal_sets))


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"{what} expects integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> InstanceFile:
    kind = None
    n = None
    inst = None
    pending_sets: dict[int, tuple[int, ...]] = {}
    seen_budget = False

    def need_graph(lineno):
        if inst is None:
            raise ParseError(lineno, "'kind' and 'vertices' must come first")

    def vertex(v, lineno):
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex {v} out of range 0..{n - 1}")
        return v

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *args = line.split()
        if word == "kind":
            if kind is not None or len(args) != 1 or args[0] not in KINDS:
                raise ParseError(lineno, f"bad or repeated kind line: {line!r}")
            kind = args[0]
        elif word == "vertices":
            if kind is None or n is not None or len(args) != 1:
                raise ParseError(lineno, "'vertices <n>' must follow 'kind' exactly once")
            (n,) = _ints(args, lineno, "vertices")
            if n < 0:
                raise ParseError(lineno, "vertex count must be nonnegative")
            inst = InstanceFile(kind, n)
        elif word == "name":
            need_graph(lineno)
            if len(args) != 2:
                raise ParseError(lineno, "name expects a vertex and a label")
            v = vertex(_ints(args[:1], lineno, "name")[0], lineno)
            inst.names[v] = args[1]
        elif word == "edge":
            need_graph(lineno)
            if len(args) != 2:
                raise ParseError(lineno, "edge expects two vertices")
            u, v = (vertex(x, lineno) for x in _ints(args, lineno, "edge"))
            if u == v and kind != "undirected3":
                log.warning("line %d: self-loop %d->%d kept as an inert edge", lineno, u, v)
            inst.edges.append((u, v))
        elif word == "terminalset":
            need_graph(lineno)
            if len(args) < 2:
                raise ParseError(lineno, "terminalset expects an index and at least one vertex")
            idx, *vs = _ints(args, lineno, "terminalset")
            if idx < 1 or idx in pending_sets:
                raise ParseError(lineno, f"terminal set index {idx} is invalid or repeated")
            pending_sets[idx] = tuple(vertex(v, lineno) for v in vs)
        elif word == "pair":
            need_graph(lineno)
            if len(args) != 2:
                raise ParseError(lineno, "pair expects two vertices")
            s, t = (vertex(x, lineno) for x in _ints(args, lineno, "pair"))
            inst.pairs.append((s, t))
        elif word == "poset-gt":
            need_graph(lineno)
            if len(args) != 2:
                raise ParseError(lineno, "poset-gt expects two elements")
            a, b = _ints(args, lineno, "poset-gt")
            if a < 0 or b < 0:
                raise ParseError(lineno, "poset elements are nonnegative")
            inst.poset_gt.append((a, b))
        elif word == "label":
            need_graph(lineno)
            if len(args) != 2:
                raise ParseError(lineno, "label expects a vertex and an element")
            v, x = _ints(args, lineno, "label")
            vertex(v, lineno)
            if x < 0:
                raise ParseError(lineno, "poset elements are nonnegative")
            inst.labels.append((v, x))
        elif word == "undeletable":
            need_graph(lineno)
            inst.undeletable += tuple(_ints(args, lineno, "undeletable"))
        elif word == "budget":
            need_graph(lineno)
            if seen_budget:
                raise ParseError(lineno, "duplicate budget")
            if len(args) != 1:
                raise ParseError(lineno, "budget expects one integer")
            (inst.budget,) = _ints(args, lineno, "budget")
            if inst.budget < 0:
                raise ParseError(lineno, "budget must be nonnegative")
            seen_budget = True
        else:
            raise ParseError(lineno, f"unknown directive {word!r}")

    if inst is None:
        raise ParseError(0, "missing 'kind' and 'vertices' lines")
    if sorted(pending_sets) != list(range(1, len(pending_sets) + 1)):
        raise ParseError(0, f"terminal set indices {sorted(pending_sets)} are not 1..k")
    inst.terminal_sets = [pending_sets[i] for i in sorted(pending_sets)]
    for e in inst.undeletable:
        if not 0 <= e < len(inst.edges):
            raise ParseError(0, f"undeletable edge {e} does not exist")
    return inst


def serialize_instance(inst: InstanceFile) -> str:
    out = [f"kind {inst.kind}", f"vertices {inst.vertices}"]
    out += [f"name {v} {inst.names[v]}" for v in sorted(inst.names)]
    out += [f"edge {u} {v}" for u, v in inst.edges]
    out += [f"terminalset {i} " + " ".join(map(str, t)) for i, t in enumerate(inst.terminal_sets, 1)]
    out += [f"pair {s} {t}" for s, t in inst.pairs]
    out += [f"poset-gt {a} {b}" for a, b in inst.poset_gt]
    out += [f"label {v} {x}" for v, x in inst.labels]
    if inst.undeletable:
        out.append("undeletable " + " ".join(map(str, inst.undeletable)))
    if inst.budget is not None:
        out.append(f"budget {inst.budget}")
    return "\n".join(out) + "\n"


def instance_digest(inst: InstanceFile) -> str:
    return hashlib.sha256(serialize_instance(inst).encode()).hexdigest()


def _graph_fields(graph: DirectedMultigraph) -> dict:
    names = {v: graph.names[v] for v in range(graph.vertex_count)} if graph.names else {}
    return dict(vertices=graph.vertex_count, edges=list(graph.edges), names=names)


def to_file(obj: Union[LinearCutInstance, LatticeInstance, MulticutInstance, UndirectedGraph],
            kind: Optional[str] = None, budget: Optional[int] = None) -> InstanceFile:
    """Wrap an in-memory instance as an :class:`InstanceFile`."""
    if isinstance(obj, LinearCutInstance):
        return InstanceFile(kind or "linear", terminal_sets=[tuple(sorted(t)) for t in obj.terminals],
                            undeletable=tuple(sorted(obj.undeletable)),
                            budget=budget if budget is not None else obj.budget,
                            **_graph_fields(obj.graph))
    if isinstance(obj, LatticeInstance):
        return InstanceFile("lattice", poset_gt=sorted(obj.poset.greater), labels=list(obj.label), budget=budget,
                            **_graph_fields(obj.graph))
    if isinstance(obj, MulticutInstance):
        return InstanceFile("multicut", pairs=list(obj.pairs), budget=budget, **_graph_fields(obj.graph))
    if isinstance(obj, UndirectedGraph):
        return InstanceFile("undirected3", vertices=obj.vertex_count, edges=list(obj.edges),
                            terminal_sets=[(t,) for t in obj.terminals], budget=budget)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_cut(text: str) -> frozenset[int]:
    ids = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            ids.append(int(line))
        except ValueError:
            raise ParseError(lineno, f"expected one edge id, got {line!r}") from None
    return frozenset(ids)


def format_cut(cut, header: Optional[str] = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += [str(e) for e in sorted(cut)]
    return "\n".join(lines) + "\n"
