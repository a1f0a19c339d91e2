"""Arithmetical structures on multigraphs: verification, d-recovery, enumeration.

An arithmetical structure on a connected loopless multigraph G is a pair of
positive integer vectors (r, d) with gcd(r) = 1 such that at every vertex i

    r[i] * d[i] = sum over j != i of r[j] * delta[i][j].

Equivalently r spans the null space of the generalized Laplacian, the matrix
with -d[i] on the diagonal and delta[i][j] off it. Everything below is exact
integer (or rational) arithmetic; no floating point.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from ._ints import divisors
from .multigraph import Multigraph, degree, edge_count, is_connected, neighbors


class NotDivisibleError(ValueError):
    """r[i] does not divide the weighted neighbor sum at vertex i (0-based)."""

    def __init__(self, vertex: int, r_i: int, total: int):
        self.vertex = vertex
        super().__init__(
            f"r[{vertex + 1}] = {r_i} does not divide the neighbor sum {total}"
        )


class GcdNotOneError(ValueError):
    """The r-vector has a common factor greater than one."""


@dataclass(frozen=True)
class ArithStructure:
    """Paired positive r/d vectors satisfying the vertex equations with gcd(r)=1."""

    r: tuple[int, ...]
    d: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"r": list(self.r), "d": list(self.d)}


@dataclass(frozen=True)
class EnumerationResult:
    """Canonically sorted enumeration output with completeness certification."""

    structures: tuple
    count: int
    complete: bool
    method: str
    elapsed_s: float
    r_max: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "count": self.count,
            "complete": self.complete,
            "method": self.method,
            "structures": [s.to_json_dict() for s in self.structures],
            "elapsed_s": self.elapsed_s,
            "r_max": self.r_max,
        }


def weighted_neighbor_sum(g: Multigraph, r, i: int) -> int:
    return sum(g.delta[i][j] * r[j] for j in range(g.n) if j != i)


def d_from_r(g: Multigraph, r) -> ArithStructure:
    """Recover the unique d-vector from r, or raise when r is not a structure."""
    if len(r) != g.n:
        raise ValueError(f"r has length {len(r)}, graph has {g.n} vertices")
    if any(x < 1 for x in r):
        raise ValueError("r entries must be positive")
    if gcd(*r) != 1:
        raise GcdNotOneError(f"gcd(r) = {gcd(*r)} != 1")
    d = []
    for i in range(g.n):
        total = weighted_neighbor_sum(g, r, i)
        if total % r[i] != 0:
            raise NotDivisibleError(i, r[i], total)
        d.append(total // r[i])
    if any(x < 1 for x in d):
        # only possible on disconnected graphs, which carry no structures
        raise ValueError("derived d has a non-positive entry; graph is disconnected")
    return ArithStructure(tuple(int(x) for x in r), tuple(d))


def verify(g: Multigraph, s: ArithStructure) -> bool:
    """Exact check of all vertex equations, positivity, and gcd(r) = 1."""
    if len(s.r) != g.n or len(s.d) != g.n:
        raise ValueError("structure length does not match vertex count")
    if any(x < 1 for x in s.r) or any(x < 1 for x in s.d):
        return False
    if gcd(*s.r) != 1:
        return False
    return all(
        s.r[i] * s.d[i] == weighted_neighbor_sum(g, s.r, i) for i in range(g.n)
    )


def residuals(g: Multigraph, s: ArithStructure) -> list[int]:
    """Per-vertex residual r[i]*d[i] - neighbor sum; all zero iff equations hold."""
    return [s.r[i] * s.d[i] - weighted_neighbor_sum(g, s.r, i) for i in range(g.n)]


def generalized_laplacian(g: Multigraph, d) -> list[list[int]]:
    """Matrix with -d[i] on the diagonal and edge multiplicities off it."""
    if len(d) != g.n:
        raise ValueError(f"d has length {len(d)}, graph has {g.n} vertices")
    return [
        [-int(d[i]) if i == j else g.delta[i][j] for j in range(g.n)]
        for i in range(g.n)
    ]


def nullspace_rank_check(matrix) -> tuple[int, tuple[int, ...] | None]:
    """Exact rank over the rationals plus a primitive kernel generator.

    Runs fraction-free (Bareiss) elimination on a copy of the integer matrix.
    When the nullity is exactly one, returns (rank, generator) where the
    generator is an integer vector with gcd one and positive first nonzero
    entry; otherwise returns (rank, None).
    """
    m = [list(map(int, row)) for row in matrix]
    nrows = len(m)
    if nrows == 0 or any(len(row) != nrows for row in m):
        raise ValueError("matrix must be square and nonempty")
    ncols = nrows

    pivot_cols: list[int] = []
    prev = 1
    row = 0
    for col in range(ncols):
        piv = next((k for k in range(row, nrows) if m[k][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for k in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[k][c] = (m[row][col] * m[k][c] - m[k][col] * m[row][c]) // prev
            m[k][col] = 0
        prev = m[row][col]
        pivot_cols.append(col)
        row += 1
    rank = row

    if ncols - rank != 1:
        return rank, None

    free_col = next(c for c in range(ncols) if c not in pivot_cols)
    x: list[Fraction] = [Fraction(0)] * ncols
    x[free_col] = Fraction(1)
    for k in reversed(range(rank)):
        col = pivot_cols[k]
        acc = sum(
            (Fraction(m[k][c]) * x[c] for c in range(col + 1, ncols)),
            start=Fraction(0),
        )
        x[col] = -acc / m[k][col]

    denom_lcm = 1
    for val in x:
        denom_lcm = denom_lcm * val.denominator // gcd(denom_lcm, val.denominator)
    ints = [int(val * denom_lcm) for val in x]
    common = 0
    for val in ints:
        common = gcd(common, val)
    ints = [val // common for val in ints]
    first = next(val for val in ints if val != 0)
    if first < 0:
        ints = [-val for val in ints]
    return rank, tuple(ints)


def _modular_candidates(residue_source: int, mult: int, modulus: int, r_max: int):
    """Increasing x in [1, r_max] with mult*x = -residue_source (mod modulus)."""
    g0 = gcd(mult, modulus)
    if residue_source % g0 != 0:
        return
    mod = modulus // g0
    if mod == 1:
        x = 1
        while x <= r_max:
            yield x
            x += 1
        return
    target = (-residue_source // g0) % mod
    x0 = (target * pow(mult // g0, -1, mod)) % mod
    if x0 == 0:
        x0 = mod
    x = x0
    while x <= r_max:
        yield x
        x += mod


def brute_force_complete_threshold(n: int, e: int) -> int:
    """Largest r-value any structure can reach: floor of E^(3*2^(n-2)-2)/(n-1)!."""
    exponent = 3 * (1 << (n - 2)) - 2
    return floor(Fraction(e**exponent, _factorial(n - 1)))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def enumerate_brute(g: Multigraph, r_max: int) -> EnumerationResult:
    """Exhaustive search for all structures with max(r) <= r_max.

    Backtracking over r-vectors with constraint-driven candidate generation:
    a vertex whose whole neighborhood is already assigned only ranges over
    divisors of its weighted neighbor sum; a vertex that is the last missing
    neighbor of an assigned vertex ranges over a residue class mod that
    vertex's r-value; remaining vertices scan 1..r_max in decreasing-degree
    order. Every divisibility constraint is checked as soon as its closed
    neighborhood is complete, so the search is complete for the stated bound.

    The result is certified complete when r_max reaches the proven cap on the
    largest r-value; otherwise it is flagged possibly incomplete.
    """
    if g.n < 2:
        raise ValueError("structures need at least two vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")

    start = time.perf_counter()
    n = g.n
    delta = g.delta
    nbrs = [neighbors(g, i) for i in range(n)]
    scan_order = sorted(range(n), key=lambda v: (-degree(g, v), v))
    r = [0] * n
    found: list[ArithStructure] = []

    def closed_nbhd_complete(u: int) -> bool:
        return r[u] != 0 and all(r[w] != 0 for w in nbrs[u])

    def consistent_after(v: int) -> bool:
        for u in (v, *nbrs[v]):
            if closed_nbhd_complete(u):
                total = sum(delta[u][w] * r[w] for w in nbrs[u])
                if total % r[u] != 0:
                    return False
        return True

    def pick():
        for v in scan_order:
            if r[v] == 0 and all(r[w] != 0 for w in nbrs[v]):
                total = sum(delta[v][w] * r[w] for w in nbrs[v])
                return v, (x for x in divisors(total) if x <= r_max)
        best = None
        for u in scan_order:
            if r[u] == 0:
                continue
            missing = [w for w in nbrs[u] if r[w] == 0]
            if len(missing) != 1:
                continue
            v = missing[0]
            step = r[u] // gcd(r[u], delta[u][v])
            if best is None or step > best[0]:
                partial = sum(delta[u][w] * r[w] for w in nbrs[u] if r[w] != 0)
                best = (step, v, u, partial)
        if best is not None:
            _, v, u, partial = best
            return v, _modular_candidates(partial, delta[u][v], r[u], r_max)
        v = next(v for v in scan_order if r[v] == 0)
        return v, iter(range(1, r_max + 1))

    def dfs(depth: int) -> None:
        if depth == n:
            if gcd(*r) == 1:
                d = tuple(
                    sum(delta[i][w] * r[w] for w in nbrs[i]) // r[i] for i in range(n)
                )
                found.append(ArithStructure(tuple(r), d))
            return
        v, candidates = pick()
        for val in candidates:
            r[v] = val
            if consistent_after(v):
                dfs(depth + 1)
        r[v] = 0

    dfs(0)
    found.sort(key=lambda s: s.r)
    complete = r_max >= brute_force_complete_threshold(n, edge_count(g))
    return EnumerationResult(
        structures=tuple(found),
        count=len(found),
        complete=complete,
        method="brute",
        elapsed_s=time.perf_counter() - start,
        r_max=r_max,
    )


def structure_from_json_dict(data: dict) -> ArithStructure:
    """Parse {"r": [...], "d": [...]}; d may be omitted when r alone is given."""
    if "r" not in data:
        raise ValueError('structure JSON needs an "r" array')
    r = tuple(int(x) for x in data["r"])
    if "d" in data and data["d"] is not None:
        return ArithStructure(r, tuple(int(x) for x in data["d"]))
    return ArithStructure(r, ())


def load_structure(path_: str) -> ArithStructure:
    with open(path_, encoding="utf-8") as fh:
        return structure_from_json_dict(json.load(fh))
