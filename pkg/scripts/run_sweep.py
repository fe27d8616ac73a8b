"""Cross-check the FPT solver against the brute-force oracle on a seeded sweep.

    python3 scripts/run_sweep.py --instances 200 --audit
"""
import argparse
import time

from linearcut import solve_linear_cut, verify_linear_cut
from linearcut.oracle import oracle_min_linear_cut_size
from linearcut.sweeps import SweepConfig, linear_case


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--instances", type=int, default=200)
    ap.add_argument("--max-vertices", type=int, default=8)
    ap.add_argument("--max-edges", type=int, default=16)
    ap.add_argument("--max-budget", type=int, default=4)
    ap.add_argument("--audit", action="store_true", help="oracle-check every freeze event")
    args = ap.parse_args()
    cfg = SweepConfig(max_vertices=args.max_vertices, max_edges=args.max_edges,
                      budgets=tuple(range(args.max_budget + 1)))

    t0 = time.perf_counter()
    bad, runs, checks, violations = [], 0, 0, 0
    for i in range(args.instances):
        inst = linear_case(i, cfg)
        truth = oracle_min_linear_cut_size(inst)
        for p in cfg.budgets:
            res = solve_linear_cut(inst.with_budget(p), audit=args.audit)
            runs += 1
            checks += res.stats.audit_checks
            violations += res.stats.audit_violations
            expected = truth is not None and truth <= p
            if res.found != expected or (res.found and not verify_linear_cut(inst.with_budget(p), res.cut)):
                bad.append((i, p, truth, res.size if res.found else None))
    print(f"{args.instances} instances, {runs} runs, {time.perf_counter() - t0:.1f} s")
    print(f"mismatches: {len(bad)}")
    for row in bad[:20]:
        print("  instance %d p=%d oracle=%s solver=%s" % row)
    if args.audit:
        print(f"freeze audit: {checks} checks, {violations} violations")
    return 1 if bad or violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
