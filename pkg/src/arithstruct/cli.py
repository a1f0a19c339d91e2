"""Command-line interface: verification, reduction, enumeration, bounds,
unit-fraction search, cross-method agreement, and the reference count/bound
table, all with machine-readable output.

Exit codes: 0 success / verified, 1 verified-false or method disagreement,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from . import bounds as bounds_mod
from . import egyptian as egyptian_mod
from . import mkn as mkn_mod
from . import multigraph as mg
from . import structures as st
from .reduction import reduce_structure

REFERENCE_CELLS: dict[int, tuple[int, ...]] = {
    3: tuple(range(1, 11)) + (100, 101),
    4: tuple(range(1, 11)),
    5: (1,),
}

DEFAULT_BRUTE_CAP = 64


def _load_graph(path: str) -> mg.Multigraph:
    graph, loops = mg.load(path)
    if loops:
        print("warning: input graph contained loops; they were stripped", file=sys.stderr)
    return graph


def _emit(data) -> None:
    json.dump(data, sys.stdout)
    sys.stdout.write("\n")


def cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    raw = st.load_structure(args.structure)
    if len(raw.r) != graph.n:
        raise ValueError(f"r has length {len(raw.r)}, graph has {graph.n} vertices")
    if not raw.d:
        try:
            s = st.d_from_r(graph, raw.r)
        except st.NotDivisibleError as exc:
            _emit(
                {
                    "verified": False,
                    "r": list(raw.r),
                    "failed_vertex": exc.vertex + 1,
                    "error": str(exc),
                }
            )
            return 1
        except ValueError as exc:
            _emit({"verified": False, "r": list(raw.r), "error": str(exc)})
            return 1
    else:
        s = raw
    ok = st.verify(graph, s)
    _emit(
        {
            "verified": ok,
            "r": list(s.r),
            "d": list(s.d),
            "residuals": st.residuals(graph, s),
            "gcd_r": gcd(*s.r),
        }
    )
    return 0 if ok else 1


def cmd_reduce(args) -> int:
    graph = _load_graph(args.graph)
    raw = st.load_structure(args.structure)
    s = raw if raw.d else st.d_from_r(graph, raw.r)
    reduced, out, step = reduce_structure(graph, s, args.vertex - 1)
    _emit(
        {
            "graph": mg.to_json_dict(reduced),
            "structure": out.to_json_dict(),
            "removed_vertex": step.removed_vertex + 1,
            "s": step.s,
            "g": step.g,
        }
    )
    return 0


def _dec_classes(structures) -> list[tuple[int, ...]]:
    return sorted({tuple(sorted(s.r, reverse=True)) for s in structures})


def _check_agree(n: int, m: int, brute_cap: int | None) -> dict:
    recursive = mkn_mod.enumerate_dec_mkn(n, m)
    via_fractions = egyptian_mod.enumerate_via_fractions(n, m)
    rec_rs = [s.r for s in recursive.structures]
    egy_rs = [s.r for s in via_fractions.structures]
    agree = rec_rs == egy_rs

    max_r = max((max(r) for r in rec_rs), default=1)
    cap = brute_cap if brute_cap else (max_r if n <= 3 else min(max_r, DEFAULT_BRUTE_CAP))
    brute = st.enumerate_brute(mg.complete_multigraph(n, m), cap)
    brute_classes = _dec_classes(brute.structures)
    expected = sorted(r for r in rec_rs if max(r) <= cap)
    agree = agree and brute_classes == expected

    return {
        "n": n,
        "m": m,
        "agree": agree,
        "counts": {
            "recursive": recursive.count,
            "egyptian": via_fractions.count,
            "brute_within_cap": len(brute_classes),
        },
        "brute_r_max": cap,
        "brute_covers_all": cap >= max_r,
    }


def cmd_enumerate(args) -> int:
    if args.family:
        if args.family != "mkn":
            raise ValueError(f"unknown family {args.family!r}")
        if args.n is None or args.m is None:
            raise ValueError("--family mkn needs --n and --m")
        if args.check_agree:
            report = _check_agree(args.n, args.m, args.r_max)
            _emit(report)
            return 0 if report["agree"] else 1
        method = args.method or "recursive"
        if method == "recursive":
            result = mkn_mod.enumerate_dec_mkn(args.n, args.m)
        elif method == "egyptian":
            result = egyptian_mod.enumerate_via_fractions(args.n, args.m)
        elif method == "brute":
            if args.r_max is None:
                raise ValueError("--method brute needs --r-max")
            result = st.enumerate_brute(
                mg.complete_multigraph(args.n, args.m), args.r_max
            )
        else:
            raise ValueError(f"unknown method {method!r}")
    else:
        if not args.graph:
            raise ValueError("need either --graph or --family")
        method = args.method or "brute"
        if method != "brute":
            raise ValueError("general graphs support only --method brute")
        if args.r_max is None:
            raise ValueError("--method brute needs --r-max")
        result = st.enumerate_brute(_load_graph(args.graph), args.r_max)
    if not result.complete:
        print(
            "warning: r-max below the completeness threshold; "
            "the enumeration may be missing structures",
            file=sys.stderr,
        )
    _emit(result.to_json_dict())
    return 0


def cmd_egyptian(args) -> int:
    reps = egyptian_mod.enumerate_unit_fractions(args.n, args.a, args.m)
    if args.count_only:
        print(len(reps))
        return 0
    for rep in reps:
        _emit(rep.to_json_dict())
    return 0


def cmd_bounds(args) -> int:
    bits = args.precision_bits or bounds_mod.default_precision_bits()
    if (args.edges is None) == (args.m is None):
        raise ValueError("need exactly one of --edges or --m")
    if args.edges is not None:
        report = bounds_mod.general_bound(args.n, args.edges, bits)
    else:
        report = bounds_mod.mkn_bound(args.n, args.m, bits)
        general = bounds_mod.general_bound(
            args.n, mg.mkn_edge_count(args.n, args.m), bits
        )
        report = bounds_mod.BoundReport(
            n=report.n,
            m=report.m,
            edges=general.edges,
            general_bound=general.general_bound,
            r1_bound=general.r1_bound,
            mkn_bound=report.mkn_bound,
            precision_bits=max(report.precision_bits, general.precision_bits),
            boundary_flag=report.boundary_flag or general.boundary_flag,
            note=report.note,
        )
    _emit(report.to_json_dict())
    return 0


def _parse_m_spec(spec: str) -> list[int]:
    out: set[int] = set()
    for part in spec.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.update(range(int(lo), int(hi) + 1))
        elif part:
            out.add(int(part))
    return sorted(out)


def _table_cells(args) -> dict[int, list[int]]:
    if args.reference:
        return {n: list(ms) for n, ms in REFERENCE_CELLS.items()}
    if not args.n_list:
        raise ValueError("need --n-list or --reference")
    if args.m_list is not None:
        ms = _parse_m_spec(args.m_list)
    else:
        ms = list(range(1, (args.m_max or 10) + 1))
    return {int(n): list(ms) for n in args.n_list.split(",")}


def cmd_table(args) -> int:
    cells = _table_cells(args)
    bits = args.precision_bits or bounds_mod.default_precision_bits()
    ns = sorted(cells)
    all_m = sorted({m for ms in cells.values() for m in ms})
    rows = []
    for m in all_m:
        row: dict[str, object] = {"m": m}
        for n in ns:
            if m in cells[n]:
                row[f"count_n{n}"] = mkn_mod.enumerate_dec_mkn(n, m).count
                row[f"bound_n{n}"] = bounds_mod.mkn_bound(n, m, bits).mkn_bound
            else:
                row[f"count_n{n}"] = ""
                row[f"bound_n{n}"] = ""
        rows.append(row)
    header = ["m"] + [col for n in ns for col in (f"count_n{n}", f"bound_n{n}")]
    if args.out == "json":
        _emit({"columns": header, "rows": rows})
        return 0
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header)
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_crosscheck(args) -> int:
    pairs: list[tuple[int, int]] = []
    for part in args.pairs.split(","):
        n_str, m_spec = part.split(":")
        for m in _parse_m_spec(m_spec):
            pairs.append((int(n_str), m))
    reports = [_check_agree(n, m, args.brute_cap) for n, m in pairs]
    all_agree = all(rep["agree"] for rep in reports)
    _emit({"pairs": reports, "all_agree": all_agree})
    return 0 if all_agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithstruct",
        description="Exact tools for arithmetical structures on multigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a structure against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--structure", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="remove a vertex and reduce the structure")
    p.add_argument("--graph", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--vertex", type=int, required=True, help="1-based vertex index")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enumerate", help="enumerate structures")
    p.add_argument("--graph")
    p.add_argument("--family", choices=["mkn"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--method", choices=["recursive", "egyptian", "brute"])
    p.add_argument("--r-max", type=int, dest="r_max")
    p.add_argument(
        "--check-agree",
        action="store_true",
        dest="check_agree",
        help="run all methods and fail on mismatch",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("egyptian", help="enumerate unit-fraction representations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.set_defaults(func=cmd_egyptian)

    p = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--precision-bits", type=int, dest="precision_bits")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="emit the count/bound table as CSV")
    p.add_argument("--n-list", dest="n_list")
    p.add_argument("--m-max", type=int, dest="m_max")
    p.add_argument("--m-list", dest="m_list")
    p.add_argument(
        "--reference",
        action="store_true",
        help="use the published cell layout (n=3: m 1-10,100,101; n=4: 1-10; n=5: 1)",
    )
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.add_argument("--precision-bits", type=int, dest="precision_bits")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("crosscheck", help="multi-method agreement over (n, m) pairs")
    p.add_argument(
        "--pairs",
        required=True,
        help='e.g. "3:1-6,4:1-2" for n=3 with m 1..6 and n=4 with m 1..2',
    )
    p.add_argument("--brute-cap", type=int, dest="brute_cap")
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
