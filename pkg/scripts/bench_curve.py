"""Search effort versus budget on seeded random digraphs.

Writes the raw CSV rows and prints the per-budget mean and max of the
split and leaf counters next to the 2p / 4^p bounds.

    python3 scripts/bench_curve.py --max-p 8 --sizes 200 --seeds 10 -o bench.csv
"""
import argparse
import csv
import sys
from collections import defaultdict

from linearcut.cli import BENCH_FIELDS, bench_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-p", type=int, default=8)
    ap.add_argument("--sizes", type=int, nargs="+", default=[200])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--terminal-sets", type=int, default=3)
    ap.add_argument("--edge-factor", type=int, default=4)
    ap.add_argument("-o", "--output", help="CSV path (default: no CSV)")
    args = ap.parse_args()

    rows = list(bench_rows(args.max_p, args.sizes, range(args.seeds), args.terminal_sets, args.edge_factor))
    if args.output:
        with open(args.output, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=BENCH_FIELDS)
            writer.writeheader()
            writer.writerows(rows)

    by_p = defaultdict(list)
    for r in rows:
        by_p[r["p"]].append(r)
    out = sys.stdout
    out.write(f"{'p':>3} {'mean splits':>12} {'max path':>9} {'2p':>4} {'max leaves':>11} "
              f"{'4^p':>7} {'max ms':>8}\n")
    for p in sorted(by_p):
        rs = by_p[p]
        out.write(f"{p:>3} {sum(r['branch_splits_total'] for r in rs) / len(rs):>12.1f} "
                  f"{max(r['max_path_splits'] for r in rs):>9} {2 * p:>4} "
                  f"{max(r['leaves'] for r in rs):>11} {4 ** p:>7} "
                  f"{max(r['wall_ms'] for r in rs):>8.1f}\n")


if __name__ == "__main__":
    main()
