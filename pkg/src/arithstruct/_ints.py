"""Exact-integer helpers shared across the package: factorization and divisors.

Everything here is plain Python integers; no floating point. A smallest-prime-factor
sieve is kept as a process-wide cache because enumeration code asks for the divisors
of millions of smallish numbers.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

_SPF_LIMIT = 1 << 16
_spf: list[int] = []


def _ensure_sieve(limit: int) -> None:
    global _spf, _SPF_LIMIT
    if _spf and limit < len(_spf):
        return
    limit = max(limit, _SPF_LIMIT)
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    _spf = spf
    _SPF_LIMIT = limit


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n == 1:
        return []
    if n < _SPF_LIMIT:
        _ensure_sieve(n)
        out = []
        while n > 1:
            p = _spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=200_000)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * pk for d in divs for pk in _prime_powers(p, e)]
    return tuple(sorted(divs))


def _prime_powers(p: int, e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out.append(out[-1] * p)
    return out


def sigma0(n: int) -> int:
    """Number of positive divisors of n."""
    count = 1
    for _, e in factorize(n):
        count *= e + 1
    return count
