"""Acceptance gate: every criterion at its stated tolerance, one line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS lines. All assertions are exact; nothing is checked against a tolerance
looser than equality of integers.
"""

from __future__ import annotations

from math import gcd

import pytest

from arithstruct.bounds import divisor_count, mkn_bound, r1_bound
from arithstruct.egyptian import (
    enumerate_unit_fractions,
    f_n_count,
    fractions_to_structure,
    structure_to_fractions,
)
from arithstruct.mkn import enumerate_dec_mkn
from arithstruct.multigraph import complete_multigraph, edge_count, path
from arithstruct.reduction import reduce_structure
from arithstruct.structures import (
    ArithStructure,
    brute_force_complete_threshold,
    d_from_r,
    enumerate_brute,
    verify,
)

from conftest import GOLDEN7_R, build_golden7

TABLE_COUNTS = {
    3: {1: 3, 2: 10, 3: 21, 4: 28, 5: 36, 6: 57, 7: 42, 8: 70, 9: 79, 10: 96,
        100: 1106, 101: 164},
    4: {1: 14, 2: 108, 3: 339, 4: 694, 5: 1104, 6: 1816, 7: 2021, 8: 3363,
        9: 4053, 10: 5370},
    5: {1: 147},
}

TABLE_BOUNDS = {
    3: {1: 20, 2: 56, 3: 127, 4: 229, 5: 362, 6: 526, 7: 720, 8: 946, 9: 1201,
        10: 1487, 100: 142796, 101: 145584},
    4: {1: 688, 2: 23028, 3: 173664, 4: 717812, 5: 2141953, 6: 5209709,
        7: 11012969, 8: 21019441, 9: 37117341, 10: 61657730},
    5: {1: 8567815},
}

CATALAN = {3: 2, 4: 5, 5: 14, 6: 42}


def test_criterion_1_reference_counts_two_methods():
    for n, row in TABLE_COUNTS.items():
        for m, expected in row.items():
            recursive = enumerate_dec_mkn(n, m).count
            assert recursive == expected, (n, m, recursive)
            egyptian = f_n_count(n, 1, m)
            assert egyptian == expected, (n, m, egyptian)
    print("\nACCEPTANCE 1 PASS: all 23 reference counts exact via both the "
          "recursive lift and the unit-fraction search")


def test_criterion_2_reference_bounds_exact():
    for n, row in TABLE_BOUNDS.items():
        for m, expected in row.items():
            report = mkn_bound(n, m, 128)
            if report.mkn_bound != expected:
                assert report.boundary_flag, (
                    f"bound mismatch without boundary flag at ({n},{m}): "
                    f"{report.mkn_bound} != {expected}"
                )
            assert report.mkn_bound == expected, (n, m, report.mkn_bound)
    print("\nACCEPTANCE 2 PASS: all 23 reference bound entries exact at "
          "128-bit working precision, no boundary flags")


def test_criterion_3_two_vertex_divisor_identity():
    for m in range(1, 201):
        result = enumerate_brute(complete_multigraph(2, m), m)
        assert result.complete
        assert result.count == divisor_count(m * m), m
    print("\nACCEPTANCE 3 PASS: ordered two-vertex counts equal sigma0(m^2) "
          "for m = 1..200 with certified-complete enumeration")


def test_criterion_4_path_catalan():
    certified = {}
    for n, expected in CATALAN.items():
        threshold = brute_force_complete_threshold(n, n - 1)
        if threshold <= 10_000:
            result = enumerate_brute(path(n), threshold)
            assert result.complete
        else:
            # The certified caps are 733007751850 (n=5) and ~1.2e30 (n=6);
            # no search that is complete for every r-vector up to such a cap
            # can run on desk hardware, so these two run at a small cap with
            # an honest incomplete flag. See notes/decisions.md.
            result = enumerate_brute(path(n), 64)
            assert not result.complete
        certified[n] = result.complete
        assert result.count == expected, (n, result.count)
    print("\nACCEPTANCE 4 PASS: path counts equal the Catalan numbers "
          f"(2, 5, 14, 42); completeness certified for n=3,4 "
          f"(thresholds feasible), flags honest for n=5,6: {certified}")


def test_criterion_5_golden_reductions():
    golden7 = build_golden7()
    s = d_from_r(golden7, GOLDEN7_R)
    assert s.d == (2, 5, 3, 2, 4, 2, 2)
    _, reduced, step = reduce_structure(golden7, s, 0)
    assert reduced.r == (1, 1, 2, 1, 1, 1)
    assert step.s == 2

    k4 = complete_multigraph(4, 1)
    s0 = d_from_r(k4, (6, 3, 2, 1))
    assert s0.d == (1, 3, 5, 11)
    g1, s1, _ = reduce_structure(k4, s0, 0)
    assert g1 == complete_multigraph(3, 2)
    assert (s1.r, s1.d) == ((3, 2, 1), (2, 4, 10))
    g2, s2, _ = reduce_structure(g1, s1, 0)
    assert g2 == complete_multigraph(2, 8)
    assert (s2.r, s2.d) == ((2, 1), (4, 16))
    print("\nACCEPTANCE 5 PASS: golden reductions reproduce bit-exactly "
          "(7-vertex example and the complete-graph chain)")


def test_criterion_6a_reductions_verify_everywhere(enumerated_pool):
    golden7 = build_golden7()
    pools = list(enumerated_pool)
    pools.append(("golden7", golden7, enumerate_brute(golden7, 8).structures))
    checked = 0
    for _, graph, structures in pools:
        if graph.n < 3:
            continue
        for s in structures:
            for i in range(graph.n):
                reduced, out, _ = reduce_structure(graph, s, i)
                assert verify(reduced, out)
                checked += 1
    print(f"\nACCEPTANCE 6a PASS: {checked} structure/vertex reductions all "
          "verify on the reduced graph")


def test_criterion_6b_round_trips():
    pairs = [(2, m) for m in range(1, 5)] + [(3, m) for m in range(1, 5)] + \
        [(4, 1), (4, 2), (5, 1)]
    checked = 0
    for n, m in pairs:
        graph = complete_multigraph(n, m)
        for dec in enumerate_dec_mkn(n, m).structures:
            s = ArithStructure(dec.r, dec.d)
            rep = structure_to_fractions(m, s)
            back = fractions_to_structure(rep)
            order = sorted(range(n), key=lambda i: s.d[i])
            assert back.r == tuple(s.r[i] for i in order)
            assert back.d == tuple(s.d[i] for i in order)
            assert verify(graph, back)
            checked += 1
        for rep in enumerate_unit_fractions(n, 1, m):
            assert structure_to_fractions(m, fractions_to_structure(rep)) == rep
    print(f"\nACCEPTANCE 6b PASS: correspondence round-trips hold for "
          f"{checked} structures across n <= 5, m <= 4")


def test_criterion_6c_bounds_respected(enumerated_pool):
    for _, graph, structures in enumerated_pool:
        e = edge_count(graph)
        cap = r1_bound(graph.n, e)
        for s in structures:
            top = max(s.r)
            assert top <= cap
            for i, ri in enumerate(s.r):
                if ri == top:
                    assert s.d[i] <= e
    print("\nACCEPTANCE 6c PASS: every enumerated structure respects the "
          "largest-r bound and the degree cap at maximal-r vertices")


def test_criterion_6d_three_method_agreement():
    pairs = [(3, m) for m in range(1, 7)] + [(4, 1), (4, 2)]
    for n, m in pairs:
        recursive = enumerate_dec_mkn(n, m)
        rec_rs = [s.r for s in recursive.structures]

        egyptian = sorted(
            tuple(sorted(fractions_to_structure(rep).r, reverse=True))
            for rep in enumerate_unit_fractions(n, 1, m)
        )
        assert egyptian == rec_rs, (n, m)

        max_r = max(max(r) for r in rec_rs)
        cap = max_r if n <= 3 else min(max_r, 64)
        brute = enumerate_brute(complete_multigraph(n, m), cap)
        classes = sorted({tuple(sorted(s.r, reverse=True)) for s in brute.structures})
        assert classes == [r for r in rec_rs if max(r) <= cap], (n, m)
        for s in brute.structures:
            assert gcd(*s.r) == 1
    print("\nACCEPTANCE 6d PASS: recursive, unit-fraction, and brute-force "
          "routes agree on n=3 (m=1..6) and n=4 (m=1,2)")
