"""Divisor counting, the divisor-function majorant, and the bound formulas."""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest

from arithstruct.bounds import (
    divisor_count,
    general_bound,
    mkn_bound,
    nicolas_f,
    r1_bound,
    sigma0_sieve,
)
from arithstruct.mkn import enumerate_dec_mkn
from arithstruct.multigraph import edge_count
from arithstruct.structures import enumerate_brute

from conftest import small_graph_pool


def test_divisor_count_basics():
    assert divisor_count(1) == 1
    assert divisor_count(9) == 3
    assert divisor_count(36) == 9
    with pytest.raises(ValueError, match="budget"):
        divisor_count(10**12 + 1)
    with pytest.raises(ValueError):
        divisor_count(0)


def test_divisor_count_agrees_with_sieve():
    counts = sigma0_sieve(2000)
    for k in range(1, 2001):
        assert divisor_count(k) == counts[k]


def test_nicolas_f_value():
    ln_f = nicolas_f(mpmath.log(9))
    assert abs(float(ln_f) - 2.9757) < 5e-4
    assert abs(float(mpmath.exp(ln_f)) - 19.6) < 0.1


def test_nicolas_f_domain():
    with pytest.raises(ValueError, match="ln x"):
        nicolas_f(mpmath.mpf(1))


def test_nicolas_f_monotone():
    # increasing from x = e^e upward, i.e. for ln x >= e
    values = [float(nicolas_f(mpmath.mpf(x) / 4)) for x in range(11, 400)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_sigma0_below_majorant_to_one_million():
    counts = sigma0_sieve(10**6)
    c = 1.538 * math.log(2)
    for m in range(3, 10**6 + 1):
        lm = math.log(m)
        if counts[m] > math.exp(c * lm / math.log(lm)):
            pytest.fail(f"divisor bound violated at {m}")


def test_r1_bound_values():
    assert r1_bound(2, 7) == 7
    assert r1_bound(3, 3) == Fraction(81, 2)
    assert r1_bound(4, 6) == Fraction(6**10, 6)


def test_general_bound_examples():
    report = general_bound(2, 3)
    assert report.general_bound == 19
    assert not report.boundary_flag

    degenerate = general_bound(2, 1)
    assert degenerate.general_bound is None
    assert "undefined" in degenerate.note


def test_general_bound_dominates_counts():
    for _, graph, r_cap in small_graph_pool():
        count = enumerate_brute(graph, r_cap).count
        report = general_bound(graph.n, edge_count(graph))
        assert report.general_bound is None or count <= report.general_bound


def test_r1_bound_dominates_enumerated_r(enumerated_pool):
    for _, graph, structures in enumerated_pool:
        cap = r1_bound(graph.n, edge_count(graph))
        for s in structures:
            assert max(s.r) <= cap


def test_mkn_bound_n2_exact():
    report = mkn_bound(2, 6)
    assert report.mkn_bound == (divisor_count(36) + 1) // 2 == 5
    assert "exact" in report.note


def test_mkn_bound_reference_sample():
    assert mkn_bound(3, 1).mkn_bound == 20
    assert mkn_bound(4, 5).mkn_bound == 2141953
    assert mkn_bound(5, 1).mkn_bound == 8567815


def test_mkn_bound_dominates_counts():
    for n, m in [(3, 1), (3, 6), (3, 10), (4, 1), (4, 2), (5, 1)]:
        assert enumerate_dec_mkn(n, m).count <= mkn_bound(n, m).mkn_bound


def test_precision_doubling_is_floor_stable():
    for n, m in [(3, 7), (4, 3), (5, 1)]:
        r128 = mkn_bound(n, m, 128)
        r256 = mkn_bound(n, m, 256)
        assert not r128.boundary_flag and not r256.boundary_flag
        assert r128.mkn_bound == r256.mkn_bound
    g128 = general_bound(6, 9, 128)
    g256 = general_bound(6, 9, 256)
    assert g128.general_bound == g256.general_bound


def test_bound_report_json():
    data = mkn_bound(3, 2).to_json_dict()
    assert data["mkn_bound"] == 56
    assert data["boundary_flag"] is False
    data = general_bound(3, 3).to_json_dict()
    assert data["r1_bound"] == "81/2"
