"""Unit-fraction representations of a/m and their correspondence with
arithmetical structures on complete multigraphs.

A representation is a non-decreasing tuple of positive integers x with
sum(1/x[i]) = a/m exactly. For a = 1 these are in bijection with structures
on the complete multigraph with n vertices and edge multiplicity m:
x[i] = d[i] + m one way, and r = q / gcd(q) with q[i] = prod(x) / x[i] the
other way. All arithmetic is exact; fractions are verified by
cross-multiplication in integers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import gcd, prod

from .multigraph import complete_multigraph
from .structures import ArithStructure, EnumerationResult, verify


class DegenerateRepError(ValueError):
    """A denominator does not exceed m, so d = x - m would not be positive."""


@dataclass(frozen=True)
class UnitFractionRep:
    """Non-decreasing denominators x with sum(1/x[i]) = a/m exactly."""

    a: int
    m: int
    x: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(self.x[i] > self.x[i + 1] for i in range(len(self.x) - 1)):
            raise ValueError("denominators must be non-decreasing")
        if not exact_sum_holds(self.a, self.m, self.x):
            raise ValueError(f"sum of 1/x is not exactly {self.a}/{self.m}")

    def to_json_dict(self) -> dict:
        return {"a": self.a, "m": self.m, "x": list(self.x)}


def exact_sum_holds(a: int, m: int, x) -> bool:
    """Integer cross-multiplication check that sum(1/x[i]) equals a/m."""
    p = prod(x)
    return m * sum(p // xi for xi in x) == a * p


def enumerate_unit_fractions(n: int, a: int, m: int) -> list[UnitFractionRep]:
    """All non-decreasing n-term representations of a/m, lexicographically sorted.

    Bounded recursion: with k terms left and reduced target a'/b', the next
    denominator ranges over ceil(b'/a') .. floor(k*b'/a'), and the residual
    must vanish exactly when no terms remain.
    """
    if n < 1 or a < 1 or m < 1:
        raise ValueError("n, a, m must all be positive")
    out: list[UnitFractionRep] = []
    prefix: list[int] = []

    def recurse(k: int, num: int, den: int, lo: int) -> None:
        if k == 0:
            if num == 0:
                out.append(UnitFractionRep(a, m, tuple(prefix)))
            return
        if num <= 0:
            return
        # smallest x with 1/x <= num/den, and largest with k/x >= num/den
        x = max(lo, den // num + 1) if den % num else max(lo, den // num)
        hi = k * den // num
        while x <= hi:
            new_num = num * x - den
            new_den = den * x
            common = gcd(new_num, new_den)
            prefix.append(x)
            recurse(k - 1, new_num // common, new_den // common, x)
            prefix.pop()
            x += 1

    recurse(n, a, m, 1)
    return out


def f_n_count(n: int, a: int, m: int) -> int:
    """Number of n-term non-decreasing representations of a/m."""
    return len(enumerate_unit_fractions(n, a, m))


def structure_to_fractions(m: int, s: ArithStructure) -> UnitFractionRep:
    """Map a structure on the n-vertex complete multigraph to denominators d + m."""
    n = len(s.r)
    if n < 2 or not verify(complete_multigraph(n, m), s):
        raise ValueError("input does not verify on the complete multigraph")
    x = tuple(sorted(di + m for di in s.d))
    return UnitFractionRep(1, m, x)


def fractions_to_structure(rep: UnitFractionRep) -> ArithStructure:
    """Invert the correspondence: primitive kernel vector q/gcd(q), d = x - m.

    q[i] = prod(x)/x[i] is computed from one full product with exact division.
    """
    if rep.a != 1:
        raise ValueError("only representations of 1/m correspond to structures")
    m, x = rep.m, rep.x
    if any(xi <= m for xi in x):
        raise DegenerateRepError(f"every denominator must exceed m = {m}")
    p = prod(x)
    q = [p // xi for xi in x]
    common = 0
    for v in q:
        common = gcd(common, v)
    r = tuple(v // common for v in q)
    d = tuple(xi - m for xi in x)
    out = ArithStructure(r, d)
    if not verify(complete_multigraph(len(x), m), out):
        raise AssertionError("reconstructed structure failed verification")
    return out


def enumerate_via_fractions(n: int, m: int) -> EnumerationResult:
    """Enumerate the non-increasing structures on the complete multigraph by
    converting every representation of 1/m; independent of the lift recursion."""
    start = time.perf_counter()
    structures = []
    for rep in enumerate_unit_fractions(n, 1, m):
        s = fractions_to_structure(rep)
        order = sorted(range(n), key=lambda i: -s.r[i])
        structures.append(
            ArithStructure(
                tuple(s.r[i] for i in order), tuple(s.d[i] for i in order)
            )
        )
    structures.sort(key=lambda s: s.r)
    return EnumerationResult(
        structures=tuple(structures),
        count=len(structures),
        complete=True,
        method="egyptian",
        elapsed_s=time.perf_counter() - start,
    )
