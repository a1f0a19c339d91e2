"""Shared fixtures: golden graphs and pre-enumerated structure pools."""

from __future__ import annotations

import pytest

from arithstruct.multigraph import Multigraph, complete_multigraph, cycle, path
from arithstruct.structures import enumerate_brute

# Seven-vertex golden graph: a triangle pair bridged through two hubs.
# Edges (1-based): 1-2, 2-3, 2-4, 3-4, 1-4, 1-5, 5-6, 5-7, 6-7.
GOLDEN7_EDGES = [(1, 2), (2, 3), (2, 4), (3, 4), (1, 4), (1, 5), (5, 6), (5, 7), (6, 7)]

GOLDEN7_R = (2, 1, 1, 2, 1, 1, 1)
GOLDEN7_D = (2, 5, 3, 2, 4, 2, 2)


def build_golden7() -> Multigraph:
    n = 7
    delta = [[0] * n for _ in range(n)]
    for i, j in GOLDEN7_EDGES:
        delta[i - 1][j - 1] = 1
        delta[j - 1][i - 1] = 1
    return Multigraph(n, tuple(tuple(row) for row in delta))


@pytest.fixture(scope="session")
def golden7() -> Multigraph:
    return build_golden7()


def small_graph_pool() -> list[tuple[str, Multigraph, int]]:
    """Graphs for property sweeps, each with a brute-force r-value cap that
    comfortably exceeds the largest r any of their structures attains."""
    return [
        ("path3", path(3), 8),
        ("path4", path(4), 24),
        ("path5", path(5), 24),
        ("cycle3", cycle(3), 40),
        ("cycle4", cycle(4), 24),
        ("K4", complete_multigraph(4, 1), 24),
        ("2K3", complete_multigraph(3, 2), 16),
        ("3K2", complete_multigraph(2, 3), 3),
    ]


@pytest.fixture(scope="session")
def enumerated_pool():
    """(name, graph, structures) triples from the brute-force search."""
    out = []
    for name, graph, r_cap in small_graph_pool():
        result = enumerate_brute(graph, r_cap)
        assert result.count > 0
        out.append((name, graph, result.structures))
    return out
