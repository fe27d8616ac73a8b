"""Exact FPT solver and tooling for the LINEAR CUT problem on directed multigraphs."""
from .graph import (DirectedMultigraph, EdgeCut, InstanceError, LinearCutInstance,
                    reachable_from, verify_linear_cut, verify_multiway_cut)
from .separator import (EXCEEDS_CAP, Separator, SeparatorQuery, disjoint_paths,
                        min_separator, residual_source_region, separator)
from .solver import (SolveResult, SolverStats, greedy_linear_cut, minimum_linear_cut,
                     pick_branch_edge, solve_linear_cut)
from .oracle import (OracleBudget, OracleRefused, oracle_min_linear_cut,
                     oracle_min_multicut, oracle_min_multiway_cut,
                     oracle_min_undirected_multiway)

__all__ = [
    "DirectedMultigraph", "EdgeCut", "InstanceError", "LinearCutInstance",
    "reachable_from", "verify_linear_cut", "verify_multiway_cut",
    "EXCEEDS_CAP", "Separator", "SeparatorQuery", "disjoint_paths", "min_separator",
    "residual_source_region", "separator",
    "SolveResult", "SolverStats", "greedy_linear_cut", "minimum_linear_cut",
    "pick_branch_edge", "solve_linear_cut",
    "OracleBudget", "OracleRefused", "oracle_min_linear_cut", "oracle_min_multicut",
    "oracle_min_multiway_cut", "oracle_min_undirected_multiway",
]
