#!/usr/bin/env python3
"""Run the three enumeration routes against each other over a range of
complete-multigraph cells and report counts and timings."""

from __future__ import annotations

import argparse
import sys
import time

from arithstruct.cli import _check_agree, _parse_m_spec


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--pairs",
        default="3:1-6,4:1-2",
        help='cells to check, e.g. "3:1-6,4:1-2"',
    )
    parser.add_argument("--brute-cap", type=int, default=None)
    args = parser.parse_args()

    failures = 0
    for part in args.pairs.split(","):
        n_str, m_spec = part.split(":")
        for m in _parse_m_spec(m_spec):
            t0 = time.perf_counter()
            report = _check_agree(int(n_str), m, args.brute_cap)
            elapsed = time.perf_counter() - t0
            status = "ok" if report["agree"] else "MISMATCH"
            counts = report["counts"]
            coverage = "full" if report["brute_covers_all"] else (
                f"classes with max r <= {report['brute_r_max']}"
            )
            print(
                f"n={report['n']} m={report['m']}: recursive={counts['recursive']}"
                f" egyptian={counts['egyptian']}"
                f" brute={counts['brute_within_cap']} ({coverage})"
                f" -> {status} [{elapsed:.2f}s]"
            )
            failures += not report["agree"]
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
