"""Connected loopless undirected multigraphs as symmetric multiplicity matrices.

A graph on n vertices is stored as the n x n matrix of edge multiplicities
delta[i][j] (arbitrary-precision integers, zero diagonal). Vertex indices are
0-based in code and 1-based in every file format and CLI message.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph: vertex count plus symmetric multiplicity matrix."""

    n: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        if len(self.delta) != self.n or any(len(row) != self.n for row in self.delta):
            raise ValueError("multiplicity matrix shape does not match vertex count")
        for i in range(self.n):
            if self.delta[i][i] != 0:
                raise ValueError("multiplicity matrix has a nonzero diagonal entry")
            for j in range(i):
                if self.delta[i][j] != self.delta[j][i]:
                    raise ValueError("multiplicity matrix is not symmetric")
                if self.delta[i][j] < 0:
                    raise ValueError("edge multiplicities must be nonnegative")


def from_matrix(matrix) -> Multigraph:
    """Build a Multigraph from a square symmetric matrix of nonnegative integers.

    Nonzero diagonal entries (loops) are stripped: a structure on a graph with
    loops is the same thing as a structure on the graph with loops removed.
    Asymmetric input is rejected.
    """
    n = len(matrix)
    if n < 1:
        raise ValueError("matrix must have at least one row")
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(n):
            entry = matrix[i][j]
            if entry != int(entry):
                raise ValueError(f"entry ({i + 1},{j + 1}) is not an integer")
            if entry < 0:
                raise ValueError(f"entry ({i + 1},{j + 1}) is negative")
            if i != j and matrix[i][j] != matrix[j][i]:
                raise ValueError("matrix is not symmetric")
    delta = tuple(
        tuple(0 if i == j else int(matrix[i][j]) for j in range(n)) for i in range(n)
    )
    return Multigraph(n, delta)


def had_loops(matrix) -> bool:
    """True when a square matrix carries nonzero diagonal entries (loops)."""
    return any(matrix[i][i] != 0 for i in range(len(matrix)))


def complete_multigraph(n: int, m: int) -> Multigraph:
    """The complete graph on n >= 2 vertices with m >= 1 edges between every pair."""
    if n < 2:
        raise ValueError(f"complete multigraph needs n >= 2, got {n}")
    if m < 1:
        raise ValueError(f"edge multiplicity must be >= 1, got {m}")
    delta = tuple(tuple(0 if i == j else m for j in range(n)) for i in range(n))
    return Multigraph(n, delta)


def path(n: int) -> Multigraph:
    """The path on n >= 2 vertices: single edges between consecutive indices."""
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    delta = tuple(
        tuple(1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n)
    )
    return Multigraph(n, delta)


def cycle(n: int) -> Multigraph:
    """The cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    delta = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        delta[i][j] = 1
        delta[j][i] = 1
    return Multigraph(n, tuple(tuple(row) for row in delta))


def edge_count(g: Multigraph) -> int:
    """Number of edges counted with multiplicity."""
    return sum(g.delta[i][j] for i in range(g.n) for j in range(i + 1, g.n))


def degree(g: Multigraph, i: int) -> int:
    """Degree of vertex i (0-based), counting multiplicities."""
    if not 0 <= i < g.n:
        raise IndexError(f"vertex index {i} out of range for {g.n} vertices")
    return sum(g.delta[i])


def is_connected(g: Multigraph) -> bool:
    """Breadth-first connectivity; any positive multiplicity is adjacency."""
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    while queue:
        v = queue.pop()
        for w in range(g.n):
            if not seen[w] and g.delta[v][w] > 0:
                seen[w] = True
                queue.append(w)
    return all(seen)


def neighbors(g: Multigraph, i: int) -> tuple[int, ...]:
    """Vertices joined to i by at least one edge."""
    return tuple(j for j in range(g.n) if g.delta[i][j] > 0)


def mkn_edge_count(n: int, m: int) -> int:
    """Edge count of the complete multigraph: m * C(n, 2)."""
    return m * comb(n, 2)


def to_json_dict(g: Multigraph) -> dict:
    """Graph file representation: 1-based edge triples [i, j, mult] with i < j."""
    edges = [
        [i + 1, j + 1, g.delta[i][j]]
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if g.delta[i][j] > 0
    ]
    return {"n": g.n, "edges": edges}


def from_json_dict(data: dict) -> tuple[Multigraph, bool]:
    """Parse the graph JSON format; returns (graph, had_loops).

    Accepts either {"n": N, "edges": [[i, j, mult], ...]} with 1-based i < j or
    {"matrix": [[...], ...]}. Duplicate (i, j) entries are an error; loops are
    stripped (the flag lets the CLI warn about them).
    """
    if "matrix" in data:
        matrix = data["matrix"]
        return from_matrix(matrix), had_loops(matrix)
    if "n" not in data or "edges" not in data:
        raise ValueError('graph JSON needs either "matrix" or "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'invalid vertex count {n!r}')
    delta = [[0] * n for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    loops = False
    for entry in data["edges"]:
        if len(entry) != 3:
            raise ValueError(f"edge entry {entry!r} is not [i, j, mult]")
        i, j, mult = entry
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge ({i},{j}) out of range for n={n}")
        if mult < 1:
            raise ValueError(f"edge ({i},{j}) has multiplicity {mult} < 1")
        if i == j:
            loops = True
            continue
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ValueError(f"duplicate edge entry for ({key[0]},{key[1]})")
        seen.add(key)
        delta[i - 1][j - 1] = mult
        delta[j - 1][i - 1] = mult
    return Multigraph(n, tuple(tuple(row) for row in delta)), loops


def load(path_: str) -> tuple[Multigraph, bool]:
    """Read a graph JSON file; returns (graph, had_loops)."""
    with open(path_, encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))
