#!/usr/bin/env python3
"""Recompute the reference count/bound table and diff it against the checked-in
transcription. Exits nonzero on any cell mismatch."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path

from arithstruct.bounds import mkn_bound
from arithstruct.cli import REFERENCE_CELLS
from arithstruct.mkn import enumerate_dec_mkn

REFERENCE_CSV = Path(__file__).resolve().parents[1] / "tests" / "data" / "mkn_table_reference.csv"


def compute_rows() -> list[dict[str, str]]:
    ns = sorted(REFERENCE_CELLS)
    all_m = sorted({m for ms in REFERENCE_CELLS.values() for m in ms})
    rows = []
    for m in all_m:
        row = {"m": str(m)}
        for n in ns:
            if m in REFERENCE_CELLS[n]:
                t0 = time.perf_counter()
                count = enumerate_dec_mkn(n, m).count
                bound = mkn_bound(n, m).mkn_bound
                print(
                    f"  n={n} m={m}: count={count} bound={bound}"
                    f" [{time.perf_counter() - t0:.2f}s]",
                    file=sys.stderr,
                )
                row[f"count_n{n}"] = str(count)
                row[f"bound_n{n}"] = str(bound)
            else:
                row[f"count_n{n}"] = ""
                row[f"bound_n{n}"] = ""
        rows.append(row)
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reference", default=str(REFERENCE_CSV))
    parser.add_argument("--out", help="also write the computed CSV here")
    args = parser.parse_args()

    rows = compute_rows()
    with open(args.reference, encoding="utf-8") as fh:
        expected = list(csv.DictReader(fh))

    mismatches = []
    for got, want in zip(rows, expected):
        for key, val in want.items():
            if got.get(key, "") != val:
                mismatches.append((want["m"], key, got.get(key, ""), val))

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)

    if len(rows) != len(expected):
        print(f"row count differs: {len(rows)} vs {len(expected)}")
        return 1
    if mismatches:
        for m, key, got, want in mismatches:
            print(f"m={m} {key}: computed {got!r}, reference {want!r}")
        return 1
    print(f"all {sum(len(v) for v in REFERENCE_CELLS.values())} cells match the reference table")
    return 0


if __name__ == "__main__":
    sys.exit(main())
