"""Walk through the seven-vertex, three-terminal example.

Shows the two separator sizes, the greedy cut (5 edges) and the exact
cut at budgets 3 and 4.
"""
from linearcut import greedy_linear_cut, separator, solve_linear_cut
from linearcut.generators import FIG1_EDGES, fig1_instance

LABEL = {i: name for name, i in FIG1_EDGES.items()}


def show(cut):
    return "{" + ", ".join(LABEL.get(e, str(e)) for e in sorted(cut)) + "}"


def main():
    inst = fig1_instance()
    g = inst.graph
    first = separator(g, {0}, {1, 2}, cap=g.edge_count)
    second = separator(g, {1}, {2}, cap=g.edge_count)
    print(f"min separator t0 | t1,t2 : {first.size} {show(first.edges)}")
    print(f"min separator t1 | t2    : {second.size} {show(second.edges)}")
    print(f"greedy                   : {show(greedy_linear_cut(inst))}")
    for p in (3, 4):
        res = solve_linear_cut(inst.with_budget(p))
        verdict = show(res.cut) if res.found else "NO"
        print(f"exact, budget {p}        : {verdict}  "
              f"(splits {res.stats.branch_splits_total}, leaves {res.stats.leaves})")


if __name__ == "__main__":
    main()
