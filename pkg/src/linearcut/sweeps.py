"""Seeded instance families shared by the acceptance suite and ``scripts/``.

Each family is a pure function of an index, so any single failing case
can be regenerated from its number alone.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .generators import random_linear, random_multicut, random_undirected3
from .graph import LinearCutInstance
from .reductions import MulticutInstance, UndirectedGraph


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 8
    max_edges: int = 16
    max_k: int = 3
    max_set_size: int = 2
    budgets: tuple[int, ...] = (0, 1, 2, 3, 4)


def linear_case(index: int, cfg: SweepConfig = SweepConfig(), min_k: int = 1,
                kind: str = "linear") -> LinearCutInstance:
    rng = random.Random(f"linear-{index}")
    k = rng.randint(min_k, cfg.max_k)
    n = rng.randint(max(2, k), cfg.max_vertices)
    m = rng.randint(0, cfg.max_edges)
    return random_linear(index, n, m, k, cfg.max_set_size, kind=kind).to_linear(0)


def multicut_case(index: int, max_vertices=6, max_edges=10, max_pairs=3, max_budget=2
                  ) -> tuple[MulticutInstance, int]:
    rng = random.Random(f"multicut-{index}")
    n = rng.randint(2, max_vertices)
    m = rng.randint(0, max_edges)
    pairs = rng.randint(1, max_pairs)
    p = rng.randint(0, max_budget)
    return random_multicut(index, n, m, pairs), p


def undirected_case(index: int, max_vertices=7, max_edges=9) -> UndirectedGraph:
    rng = random.Random(f"undirected3-{index}")
    n = rng.randint(3, max_vertices)
    m = rng.randint(0, min(max_edges, n * (n - 1) // 2))
    return random_undirected3(index, n, m)
