"""Recursive enumeration of non-increasing arithmetical structures on the
complete multigraph with n vertices and edge multiplicity m.

Base case n = 2: the structures on the two-vertex graph with M parallel edges
are exactly the coprime pairs of divisors of M, so the non-increasing ones are
the coprime divisor pairs with r1 >= r2.

Recursive step: sort so r1 is a maximum; then d1 = m * sum(tail) / r1 lies in
1..(n-1)*m, and the tail divided by its gcd g is a non-increasing structure on
the complete multigraph with multiplicity m^2 + d1*m on n-1 vertices, with g a
divisor of m. So for each d1 we recursively enumerate that smaller problem,
rescale by every divisor g of m, and keep the candidates whose lift back to n
vertices satisfies all four closure conditions (maximality of r1, integrality
of r1 and of every other degree, primitivity of the full vector).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from ._ints import divisors, sigma0
from .structures import EnumerationResult


@dataclass(frozen=True)
class DecStructure:
    """Non-increasing structure on the n-vertex complete multigraph, mult m."""

    n: int
    m: int
    r: tuple[int, ...]
    d: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"r": list(self.r), "d": list(self.d)}


def _d_vector(m: int, r: tuple[int, ...]) -> tuple[int, ...]:
    total = sum(r)
    return tuple(m * (total - ri) // ri for ri in r)


def _as_dec_structure(n: int, m: int, r: tuple[int, ...]) -> DecStructure:
    return DecStructure(n=n, m=m, r=r, d=_d_vector(m, r))


@lru_cache(maxsize=None)
def _dec_pairs(m: int) -> tuple[tuple[int, int], ...]:
    divs = divisors(m)
    pairs = [
        (r1, r2)
        for r1 in divs
        for r2 in divs
        if r1 >= r2 and gcd(r1, r2) == 1
    ]
    assert 2 * len(pairs) == sigma0(m * m) + 1
    return tuple(sorted(pairs))


def enumerate_mk2(m: int) -> list[DecStructure]:
    """Non-increasing structures on the two-vertex graph with m parallel edges."""
    if m < 1:
        raise ValueError(f"edge multiplicity must be >= 1, got {m}")
    return [_as_dec_structure(2, m, r) for r in _dec_pairs(m)]


def _lift_r(
    m: int, d1: int, g: int, tail_prim: tuple[int, ...], total_prim: int
) -> tuple[int, ...] | None:
    """Core of the lift: scaled tail g*tail_prim, returns the full r or None."""
    ms = m * g * total_prim
    if ms % d1 != 0:
        return None
    r1 = ms // d1
    if r1 < g * tail_prim[0]:
        return None
    if gcd(r1, g) != 1:
        return None
    grand = r1 + g * total_prim
    for tj in tail_prim:
        rj = g * tj
        if (m * (grand - rj)) % rj != 0:
            return None
    return (r1, *(g * tj for tj in tail_prim))


def lift_check(
    n: int, m: int, d1: int, tail: tuple[int, ...], g: int
) -> DecStructure | None:
    """Try to extend a scaled (n-1)-vertex tail to a structure on n vertices.

    `tail` is non-increasing and already multiplied by the scale g (a divisor
    of m, so gcd(tail) == g). Accepts iff
      (1) r1 = m*sum(tail)/d1 is at least max(tail),
      (2) r1 is an integer, i.e. d1 divides m*sum(tail),
      (3) every remaining degree m*(r1 + sum(tail) - tail[j]) / tail[j] is
          an integer, and
      (4) gcd(r1, g) == 1, so the full vector is primitive.
    Returns the canonical non-increasing structure, or None on rejection.
    """
    prim = tuple(x // g for x in tail)
    if any(x * g != y for x, y in zip(prim, tail)):
        raise ValueError("tail is not divisible by the stated scale")
    r = _lift_r(m, d1, g, prim, sum(prim))
    return None if r is None else _as_dec_structure(n, m, r)


def _coprime_part(g: int, k: int) -> int:
    """The largest divisor of g coprime to k."""
    while (h := gcd(g, k)) > 1:
        g //= h
    return g


@lru_cache(maxsize=None)
def _dec_r_tuples(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Sorted r-tuples of all non-increasing structures, memoized per (n, m)."""
    if n == 2:
        return _dec_pairs(m)
    found: set[tuple[int, ...]] = set()
    scales = divisors(m)
    for d1 in range(1, (n - 1) * m + 1):
        # primitivity forces every prime of the scale to divide d1
        admissible = [g for g in scales if _coprime_part(g, d1) == 1]
        reduced_mult = m * m + d1 * m
        for r_prim in _dec_r_tuples(n - 1, reduced_mult):
            total_prim = sum(r_prim)
            for g in admissible:
                r = _lift_r(m, d1, g, r_prim, total_prim)
                if r is not None:
                    found.add(r)
    return tuple(sorted(found))


def enumerate_dec_mkn(n: int, m: int) -> EnumerationResult:
    """All non-increasing structures on the n-vertex complete multigraph."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    start = time.perf_counter()
    structures = tuple(_as_dec_structure(n, m, r) for r in _dec_r_tuples(n, m))
    return EnumerationResult(
        structures=structures,
        count=len(structures),
        complete=True,
        method="recursive",
        elapsed_s=time.perf_counter() - start,
    )


def clear_memo() -> None:
    """Drop the memo tables (they are shared process-wide)."""
    _dec_r_tuples.cache_clear()
    _dec_pairs.cache_clear()
