"""Closed-form upper bounds on structure counts and the divisor-function machinery.

Three bound families are evaluated:

  * the general count bound  n!/2 * E^(2^(n-2)-1) * f(E^(2^(n-1))),
  * the largest-r bound      E^(3*2^(n-2)-2) / (n-1)!   (exact rational), and
  * the complete-multigraph refinement
        (n-1)!/2 * prod_{k=0}^{n-4} (n-k)^(2^(n-3-k)-1) * m^(2^(n-2)-1)
                 * (f(m^(2^(n-1)) * prod_{k=3}^{n} k^(2^(k-2))) + 1),

where f(x) = x^(1.538*ln 2 / ln ln x) dominates the divisor function. The
f-arguments are astronomically large, so all transcendental work happens in
log space with mpmath arbitrary-precision reals (>= 128 bits, doubled whenever
the pre-floor value sits within 2^-20 of an integer). Everything else is exact
integer or rational arithmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath
from mpmath import mp

from ._ints import factorize

DEFAULT_PRECISION_BITS = 128
_PRECISION_ENV = "ARITHSTRUCT_PRECISION_BITS"
_MAX_DOUBLINGS = 8
_FACTOR_BUDGET = 10**12

_BOUNDARY_EPS_EXP = -20  # "near an integer" means within 2^-20


def default_precision_bits() -> int:
    raw = os.environ.get(_PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 64:
        raise ValueError(f"{_PRECISION_ENV} must be at least 64, got {bits}")
    return bits


@dataclass(frozen=True)
class BoundReport:
    """Evaluated bound formulas plus the precision bookkeeping behind them."""

    n: int
    edges: int | None = None
    m: int | None = None
    general_bound: int | None = None
    r1_bound: Fraction | None = None
    mkn_bound: int | None = None
    precision_bits: int = DEFAULT_PRECISION_BITS
    boundary_flag: bool = False
    note: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "m": self.m,
            "general_bound": self.general_bound,
            "r1_bound": None
            if self.r1_bound is None
            else f"{self.r1_bound.numerator}/{self.r1_bound.denominator}",
            "mkn_bound": self.mkn_bound,
            "precision_bits": self.precision_bits,
            "boundary_flag": self.boundary_flag,
            "note": self.note,
        }


def divisor_count(m: int) -> int:
    """sigma_0(m) by trial-division factorization; desk scale m <= 10^12."""
    if m < 1:
        raise ValueError(f"divisor count needs m >= 1, got {m}")
    if m > _FACTOR_BUDGET:
        raise ValueError(f"{m} exceeds the factorization budget {_FACTOR_BUDGET}")
    count = 1
    for _, e in factorize(m):
        count *= e + 1
    return count


def _nicolas_exponent_constant():
    # 1.538 * ln 2, built from exact 1538/1000 at working precision
    return mp.mpf(1538) / 1000 * mp.log(2)


def nicolas_f(log_x, precision_bits: int | None = None):
    """ln f(x) for the divisor-function majorant f, taking and returning logs.

    The input is ln x (x itself may be far too large to represent); the output
    is ln f(x) = 1.538 * ln 2 * ln x / ln ln x, at the requested precision.
    """
    bits = precision_bits or default_precision_bits()
    with mp.workprec(bits):
        lx = mp.mpf(log_x)
        if lx <= 1:
            raise ValueError(f"need ln x > 1 (x > e), got ln x = {lx}")
        return _nicolas_exponent_constant() * lx / mp.log(lx)


def _floored(prefactor: int, ln_arg_terms, plus_one: bool, precision_bits: int):
    """floor(prefactor * (f(arg) [+ 1])) with near-integer escalation.

    The f-argument is described exactly as sum(c * ln(b)) term pairs so that
    every precision level recomputes it from scratch. Evaluation escalates by
    precision doubling until the pre-floor value is comfortably away from an
    integer (or the doubling budget runs out, leaving the boundary flag set).
    """
    bits = precision_bits
    eps = mpmath.mpf(2) ** _BOUNDARY_EPS_EXP
    headroom = prefactor.bit_length() + 64
    result = None
    for _ in range(_MAX_DOUBLINGS + 1):
        with mp.workprec(bits + headroom):
            ln_arg = mp.fsum(c * mp.log(b) for c, b in ln_arg_terms)
            ln_f = _nicolas_exponent_constant() * ln_arg / mp.log(ln_arg)
            headroom = prefactor.bit_length() + int(ln_f / mp.log(2)) + 64
        with mp.workprec(bits + headroom):
            ln_arg = mp.fsum(c * mp.log(b) for c, b in ln_arg_terms)
            if ln_arg <= 1:
                raise ValueError("f-argument must exceed e")
            ln_f = _nicolas_exponent_constant() * ln_arg / mp.log(ln_arg)
            f_val = mp.exp(ln_f)
            value = prefactor * (f_val + 1 if plus_one else f_val)
            fl = int(mp.floor(value))
            near = min(value - fl, fl + 1 - value) < eps
        result = (fl, near, bits)
        if not near:
            return result
        bits *= 2
    return result


def r1_bound(n: int, e: int) -> Fraction:
    """Exact rational cap on the largest r-value: E^(3*2^(n-2)-2) / (n-1)!."""
    if n < 2 or e < 1:
        raise ValueError("need n >= 2 and at least one edge")
    exponent = 3 * (1 << (n - 2)) - 2
    fact = 1
    for i in range(2, n):
        fact *= i
    return Fraction(e**exponent, fact)


def general_bound(n: int, e: int, precision_bits: int | None = None) -> BoundReport:
    """Count bound for any connected graph with n vertices and e edges."""
    if n < 2 or e < 1:
        raise ValueError("need n >= 2 and at least one edge")
    bits = precision_bits or default_precision_bits()
    rb = r1_bound(n, e)
    if e == 1:
        # ln ln of the f-argument is undefined; the only connected graph here
        # is the single edge, whose count is known exactly.
        return BoundReport(
            n=n,
            edges=e,
            r1_bound=rb,
            precision_bits=bits,
            note="f-term undefined for a single edge; exact count is sigma0(1)=1",
        )
    prefactor = _half_factorial(n) * e ** ((1 << (n - 2)) - 1)
    terms = [((1 << (n - 1)), e)]
    fl, near, used = _floored(prefactor, terms, plus_one=False, precision_bits=bits)
    return BoundReport(
        n=n,
        edges=e,
        general_bound=fl,
        r1_bound=rb,
        precision_bits=used,
        boundary_flag=near,
    )


def _half_factorial(n: int) -> int:
    # n!/2 as an exact integer (n >= 2)
    out = 1
    for i in range(3, n + 1):
        out *= i
    return out


def mkn_bound(n: int, m: int, precision_bits: int | None = None) -> BoundReport:
    """Bound on the non-increasing structure count of the complete multigraph.

    For n = 2 the count is known exactly, (sigma0(m^2) + 1) / 2, and is
    reported in place of the formula.
    """
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    bits = precision_bits or default_precision_bits()
    if n == 2:
        exact = (divisor_count(m * m) + 1) // 2
        return BoundReport(
            n=n,
            m=m,
            mkn_bound=exact,
            precision_bits=bits,
            note="exact coprime-divisor-pair count, not a formula bound",
        )
    prefactor = _half_factorial(n - 1)
    for k in range(0, n - 3):
        prefactor *= (n - k) ** ((1 << (n - 3 - k)) - 1)
    prefactor *= m ** ((1 << (n - 2)) - 1)
    terms = [((1 << (n - 1)), m)] if m > 1 else []
    terms += [((1 << (k - 2)), k) for k in range(3, n + 1)]
    fl, near, used = _floored(prefactor, terms, plus_one=True, precision_bits=bits)
    return BoundReport(
        n=n,
        m=m,
        mkn_bound=fl,
        precision_bits=used,
        boundary_flag=near,
    )


def sigma0_sieve(limit: int) -> list[int]:
    """Divisor counts for 0..limit via a smallest-prime-factor sieve."""
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    counts = [0, 1] + [0] * (limit - 1)
    for k in range(2, limit + 1):
        p = spf[k]
        q, e = k, 0
        while q % p == 0:
            q //= p
            e += 1
        counts[k] = counts[q] * (e + 1)
    return counts
