"""Command-line entry point: ``linearcut <subcommand> ...``.

Exit codes: 0 solution / valid, 2 NO / invalid, 1 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional

from . import generators
from .graph import InstanceError, verify_linear_cut, verify_multiway_cut
from .io import (InstanceFile, format_cut, instance_digest, parse_cut,
                 parse_instance, serialize_instance, to_file)
from .oracle import (OracleBudget, OracleRefused, oracle_min_linear_cut,
                     oracle_min_multicut, oracle_min_multiway_cut,
                     oracle_min_undirected_multiway)
from .reductions import (lattice_to_linear, lattice_to_multicut, linear_to_lattice,
                         linear_to_multicut, multicut_to_lattice, multiway_two_approx,
                         poset_is_antichain, poset_is_chain, umultiway_to_linear,
                         verify_lattice_cut, verify_multicut, verify_undirected_multiway)
from .solver import SolverStats, greedy_linear_cut, solve_linear_cut

log = logging.getLogger("linearcut")

EXIT_OK, EXIT_ERROR, EXIT_NO = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load(path: str) -> InstanceFile:
    return parse_instance(_read(path))


def _budget(inst: InstanceFile, flag: Optional[int]) -> int:
    p = flag if flag is not None else inst.budget
    if p is None:
        raise UsageError("no budget: pass --budget or put 'budget <p>' in the file")
    if p < 0:
        raise UsageError("budget must be nonnegative")
    return p


def run_report(inst: InstanceFile, cut, stats: Optional[SolverStats], wall_ms: float) -> dict:
    return {
        "outcome": None if cut is None else sorted(cut),
        "cut_size": None if cut is None else len(cut),
        "stats": (stats or SolverStats()).as_dict(),
        "wall_time_ms": round(wall_ms, 3),
        "instance_digest": instance_digest(inst),
    }


def _emit(cut, header=None) -> int:
    if cut is None:
        print("NO")
        return EXIT_NO
    sys.stdout.write(format_cut(cut, header))
    return EXIT_OK


def _linear_view(inst: InstanceFile, p: int):
    if inst.kind in ("linear", "multiway"):
        return inst.to_linear(p)
    if inst.kind == "lattice":
        lat = inst.to_lattice()
        if poset_is_chain(lat.poset):
            return lattice_to_linear(lat, p)
        raise UsageError("only chain-ordered lattice instances can be solved exactly; "
                         "use 'approx-multiway' for antichains or 'oracle' for small cases")
    raise UsageError(f"'solve' does not handle {inst.kind} instances")


def cmd_solve(args) -> int:
    inst = _load(args.file)
    p = _budget(inst, args.budget)
    if inst.kind == "multiway":
        raise UsageError("multiway instances go through 'approx-multiway' or 'oracle'")
    linear = _linear_view(inst, p)
    t0 = time.perf_counter()
    res = solve_linear_cut(linear, audit=args.audit_oracle)
    wall = (time.perf_counter() - t0) * 1000
    if args.stats_json:
        Path(args.stats_json).write_text(json.dumps(run_report(inst, res.cut, res.stats, wall), indent=2) + "\n")
    if args.audit_oracle:
        log.info("audit: %d freeze checks, %d violations", res.stats.audit_checks, res.stats.audit_violations)
        if res.stats.audit_violations:
            print(f"audit: {res.stats.audit_violations} freeze events changed the optimum", file=sys.stderr)
    return _emit(res.cut, None if res.cut is None else f"size {res.size}")


def cmd_greedy(args) -> int:
    inst = _load(args.file)
    cut = greedy_linear_cut(_linear_view(inst, inst.budget or 0))
    return _emit(cut, None if cut is None else f"greedy size {len(cut)}")


def cmd_oracle(args) -> int:
    inst = _load(args.file)
    # no budget means the unbounded minimum; every edge is an upper bound
    p = _budget(inst, args.budget) if args.budget is not None or inst.budget is not None else len(inst.edges)
    budget = OracleBudget(max_edges_considered=args.max_edges)
    if inst.kind == "linear":
        res = oracle_min_linear_cut(inst.to_linear(p), budget=budget)
    elif inst.kind == "multiway":
        res = oracle_min_multiway_cut(inst.graph(), inst.terminal_sets, p,
                                      undeletable=inst.undeletable, budget=budget)
    elif inst.kind == "multicut":
        res = oracle_min_multicut(inst.graph(), inst.pairs, p, budget=budget)
    elif inst.kind == "lattice":
        mc = lattice_to_multicut(inst.to_lattice())
        res = oracle_min_multicut(mc.graph, mc.pairs, p, budget=budget)
    else:
        res = oracle_min_undirected_multiway(inst.to_undirected(), p, budget=budget)
    return _emit(res.cut, None if res.cut is None else f"oracle size {res.size}")


def cmd_verify(args) -> int:
    inst = _load(args.file)
    cut = parse_cut(_read(args.cut_file))
    if inst.kind == "linear":
        linear = inst.to_linear(len(cut) if inst.budget is None else inst.budget)
        ok = verify_linear_cut(linear, cut)
    elif inst.kind == "multiway":
        ok = not (cut & set(inst.undeletable)) and verify_multiway_cut(inst.graph(), inst.terminal_sets, cut)
    elif inst.kind == "multicut":
        ok = verify_multicut(inst.to_multicut(), cut)
    elif inst.kind == "lattice":
        ok = verify_lattice_cut(inst.to_lattice(), cut)
    else:
        ok = verify_undirected_multiway(inst.to_undirected(), cut)
    print("VALID" if ok else "INVALID")
    return EXIT_OK if ok else EXIT_NO


def cmd_approx(args) -> int:
    inst = _load(args.file)
    p = _budget(inst, args.budget)
    if inst.kind == "lattice":
        lat = inst.to_lattice()
        if not poset_is_antichain(lat.poset):
            raise UsageError("approx-multiway needs an antichain-labelled lattice instance")
        groups: dict[int, list[int]] = {}
        for v, x in lat.label:
            groups.setdefault(x, []).append(v)
        graph, sets = lat.graph, [groups[x] for x in sorted(groups)]
        F: tuple = ()
    elif inst.kind in ("multiway", "linear"):
        graph, sets, F = inst.graph(), inst.terminal_sets, inst.undeletable
    else:
        raise UsageError(f"approx-multiway does not handle {inst.kind} instances")
    limit = graph.edge_count
    while True:
        res = multiway_two_approx(graph, sets, p, F)
        if res.found or not args.retry_doubling or p >= limit:
            break
        # convenience retry, outside the factor-two guarantee's premise
        p = min(limit, max(1, 2 * p))
        log.info("retry-doubling: budget raised to %d", p)
    header = None
    if res.found:
        header = f"multiway size {len(res.cut)} (forward {res.forward.size}, backward {res.backward.size}, budget {p})"
    return _emit(res.cut, header)


def cmd_reduce(args) -> int:
    inst = _load(args.file)
    p = args.budget if args.budget is not None else inst.budget
    src, dst = inst.kind, args.to
    if src == "multicut" and dst == "lattice":
        if p is None:
            raise UsageError("multicut -> lattice needs a budget")
        out = to_file(multicut_to_lattice(inst.to_multicut(), p).instance, budget=p)
    elif src == "lattice" and dst == "multicut":
        out = to_file(lattice_to_multicut(inst.to_lattice()), budget=p)
    elif src == "lattice" and dst == "linear":
        out = to_file(lattice_to_linear(inst.to_lattice(), p or 0), budget=p)
    elif src == "undirected3" and dst == "linear":
        out = to_file(umultiway_to_linear(inst.to_undirected(), p or 0), budget=p)
    elif src == "linear" and dst == "lattice":
        out = to_file(linear_to_lattice(inst.to_linear(p)), budget=p)
    elif src == "linear" and dst == "multicut":
        out = to_file(linear_to_multicut(inst.to_linear(p)), budget=p)
    else:
        raise UsageError(f"no reduction from {src} to {dst}")
    text = serialize_instance(out)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.what == "fig1":
        sys.stdout.write(generators.FIG1_TEXT)
        return EXIT_OK
    if args.what == "hardness-gadget":
        if not args.source:
            raise UsageError("gen hardness-gadget needs an undirected3 file")
        src = _load(args.source)
        if src.kind != "undirected3":
            raise UsageError("gen hardness-gadget expects a kind undirected3 file")
        out = to_file(umultiway_to_linear(src.to_undirected(), src.budget or 0), budget=src.budget)
        sys.stdout.write(serialize_instance(out))
        return EXIT_OK
    # random
    if args.kind == "multicut":
        out = to_file(generators.random_multicut(args.seed, args.vertices, args.edges, args.pairs),
                      budget=args.budget)
    elif args.kind == "undirected3":
        out = to_file(generators.random_undirected3(args.seed, args.vertices, args.edges), budget=args.budget)
    else:
        out = generators.random_linear(args.seed, args.vertices, args.edges, args.terminal_sets,
                                       args.max_set_size, kind=args.kind)
        out.budget = args.budget
    sys.stdout.write(serialize_instance(out))
    return EXIT_OK


BENCH_FIELDS = ["vertices", "edges", "k", "seed", "p", "outcome", "cut_size", "wall_ms",
                "branch_splits_total", "max_path_splits", "leaves", "separator_calls",
                "freeze_events", "bound_leaves_4p"]


def bench_rows(max_p: int, sizes, seeds, k: int = 3, edge_factor: int = 4, max_set_size: int = 1):
    """One row per (size, seed, p): wall time and search counters."""
    for n in sizes:
        for seed in seeds:
            base = generators.random_linear(seed, n, edge_factor * n, k, max_set_size).to_linear(0)
            for p in range(max_p + 1):
                t0 = time.perf_counter()
                res = solve_linear_cut(base.with_budget(p))
                wall = (time.perf_counter() - t0) * 1000
                s = res.stats
                yield dict(vertices=n, edges=edge_factor * n, k=k, seed=seed, p=p,
                           outcome="cut" if res.found else "NO",
                           cut_size="" if res.cut is None else res.size, wall_ms=round(wall, 3),
                           branch_splits_total=s.branch_splits_total,
                           max_path_splits=s.max_splits_on_any_root_to_leaf_path,
                           leaves=s.leaves, separator_calls=s.separator_calls,
                           freeze_events=s.freeze_events, bound_leaves_4p=4 ** p)


def cmd_bench(args) -> int:
    writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS)
    writer.writeheader()
    for row in bench_rows(args.max_p, args.sizes, range(args.seeds), args.terminal_sets,
                          args.edge_factor, args.max_set_size):
        writer.writerow(row)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linearcut", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact FPT solve at a budget")
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.add_argument("--audit-oracle", action="store_true",
                   help="cross-check every freeze event by brute force on small sub-instances")
    p.add_argument("--stats-json", metavar="PATH")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("greedy", help="separate T1, then T2, ... one min separator at a time")
    p.add_argument("file")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("oracle", help="brute-force minimum, at most --budget if given (small instances only)")
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.add_argument("--max-edges", type=int, default=20)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a cut file against an instance")
    p.add_argument("file")
    p.add_argument("cut_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("approx-multiway", help="factor-two multiway cut from two linear cuts")
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.add_argument("--retry-doubling", action="store_true",
                   help="on NO, retry with doubled budget (no factor-two guarantee at the original budget)")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("reduce", help="transform an instance into another problem")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=["lattice", "multicut", "linear"])
    p.add_argument("--budget", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="emit instances")
    p.add_argument("what", choices=["random", "fig1", "hardness-gadget"])
    p.add_argument("source", nargs="?", help="undirected3 file for hardness-gadget")
    p.add_argument("--kind", default="linear", choices=["linear", "multiway", "multicut", "undirected3"])
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--edges", type=int, default=16)
    p.add_argument("--terminal-sets", type=int, default=3)
    p.add_argument("--max-set-size", type=int, default=1)
    p.add_argument("--pairs", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV of search effort versus budget")
    p.add_argument("--max-p", type=int, default=6)
    p.add_argument("--sizes", type=_int_list, default=[50, 100, 200])
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--terminal-sets", type=int, default=3)
    p.add_argument("--edge-factor", type=int, default=4)
    p.add_argument("--max-set-size", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, InstanceError, OracleRefused, OSError, ValueError) as exc:
        print(f"linearcut {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
