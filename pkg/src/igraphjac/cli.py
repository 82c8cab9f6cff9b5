"""Command line interface.

Subcommands:
  jacobian    invariant factors of the Jacobian group for one n or a range
  trees       spanning tree counts with the square decomposition
  asymptotic  tree-growth constant by root product and by Mahler integral
  table       regenerate the reference tables (growth constants / Jacobians)

Ranges are written a..b (inclusive).  --json switches record streams to one
JSON object per line; big integers are serialized as decimal strings.  Exit
codes: 0 success, 1 internal consistency failure, 2 usage error, 3 numeric
precision failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd

import mpmath

from . import __version__
from .asymptotics import (
    DEFAULT_PRECISION,
    asymptotic_ratio,
    mahler_constant,
    mahler_integral,
)
from .errors import (
    ClassificationFailure,
    ConvergenceFailure,
    DisconnectedError,
    InternalInconsistency,
    InvalidParams,
    LoopError,
    PrecisionExhausted,
    QuadratureFailure,
)
from .igraph import normalize
from .jacobian import (
    LAPLACIAN_GATE,
    jacobian_via_companion,
    jacobian_via_laplacian,
    rank_bounds_report,
)
from .treecount import (
    TreeCountMethod,
    check_lower_bound,
    decompose,
    tree_count_chebyshev,
    tree_count_kirchhoff,
    tree_count_resultant,
)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b")
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad value {text!r}; expected int or a..b")


def _emit(record: dict, as_json: bool, text: str, out=None):
    stream = out or sys.stdout
    if as_json:
        print(json.dumps(record), file=stream)
    else:
        print(text, file=stream)


def _error_record(n: int, k: int, l: int, exc: Exception) -> dict:
    rec = {"params": {"n": n, "k": k, "l": l}, "error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, DisconnectedError):
        rec["components"] = exc.m
    return rec


def cmd_jacobian(args) -> int:
    status = EXIT_OK
    for n in args.n:
        try:
            p = normalize(n, args.k, args.l)
        except (DisconnectedError, LoopError, InvalidParams) as exc:
            rec = _error_record(n, args.k, args.l, exc)
            _emit(rec, args.json, f"I({n},{args.k},{args.l})  skipped: {rec['detail']}")
            continue
        method = args.method
        if method == "auto":
            method = "companion" if p.n > LAPLACIAN_GATE else "laplacian"
        timings: dict[str, float] = {}
        groups = {}
        if method in ("companion", "both"):
            t0 = time.perf_counter()
            groups["companion"] = jacobian_via_companion(p)
            timings["companion"] = round((time.perf_counter() - t0) * 1000, 3)
        if method in ("laplacian", "both"):
            t0 = time.perf_counter()
            groups["laplacian"] = jacobian_via_laplacian(p, allow_large=True)
            timings["laplacian"] = round((time.perf_counter() - t0) * 1000, 3)
        if len(groups) == 2 and groups["companion"] != groups["laplacian"]:
            status = EXIT_INCONSISTENT
            rec = {
                "params": {"n": p.n, "k": p.k, "l": p.l},
                "error": "InternalInconsistency",
                "detail": "companion and laplacian routes disagree",
                "companion": [str(d) for d in groups["companion"].torsion],
                "laplacian": [str(d) for d in groups["laplacian"].torsion],
            }
            _emit(rec, args.json, f"{p}  METHODS DISAGREE: {rec['companion']} vs {rec['laplacian']}")
            continue
        group = next(iter(groups.values()))
        bounds = rank_bounds_report(p, group)
        rec = {
            "params": {"n": p.n, "k": p.k, "l": p.l},
            "torsion": [str(d) for d in group.torsion],
            "free_rank": group.free_rank,
            "tau": str(group.order),
            "checks": {"rank_lower": bounds["lower_ok"], "rank_upper": bounds["upper_ok"]},
            "methods_used": sorted(groups),
            "timings_ms": timings,
        }
        if not (bounds["lower_ok"] and bounds["upper_ok"]):
            status = EXIT_INCONSISTENT
        text = (
            f"{p}  torsion={list(group.torsion)}  free_rank={group.free_rank}"
            f"  tau={group.order}  rank={group.rank} in [2,{bounds['upper']}]"
        )
        _emit(rec, args.json, text)
    return status


def cmd_trees(args) -> int:
    status = EXIT_OK
    for n in args.n:
        try:
            p = normalize(n, args.k, args.l)
        except (DisconnectedError, LoopError, InvalidParams) as exc:
            rec = _error_record(n, args.k, args.l, exc)
            _emit(rec, args.json, f"I({n},{args.k},{args.l})  skipped: {rec['detail']}")
            continue
        method = args.method
        if method == "auto":
            method = "resultant" if p.n > LAPLACIAN_GATE else "kirchhoff"
        timings: dict[str, float] = {}
        counts = {}
        wanted = (
            [m.value for m in TreeCountMethod] if method == "all" else [method]
        )
        for name in wanted:
            t0 = time.perf_counter()
            if name == "kirchhoff":
                counts[name] = tree_count_kirchhoff(p)
            elif name == "resultant":
                counts[name] = tree_count_resultant(p)
            else:
                counts[name] = tree_count_chebyshev(p, precision_bits=args.precision)
            timings[name] = round((time.perf_counter() - t0) * 1000, 3)
        values = {c.tau for c in counts.values()}
        if len(values) != 1:
            status = EXIT_INCONSISTENT
            rec = {
                "params": {"n": p.n, "k": p.k, "l": p.l},
                "error": "InternalInconsistency",
                "detail": "tree count methods disagree",
                "counts": {name: str(c.tau) for name, c in counts.items()},
            }
            _emit(rec, args.json, f"{p}  METHODS DISAGREE: {rec['counts']}")
            continue
        count = next(iter(counts.values()))
        dec = decompose(count, p)
        checks = {
            "divisible_by_n": count.tau % p.n == 0,
            "cube_bound": check_lower_bound(p, count),
        }
        if not all(checks.values()):
            status = EXIT_INCONSISTENT
        rec = {
            "params": {"n": p.n, "k": p.k, "l": p.l},
            "tau": str(count.tau),
            "a": str(dec.a),
            "multiplier": dec.multiplier,
            "checks": checks,
            "methods_used": sorted(counts),
            "timings_ms": timings,
        }
        text = (
            f"{p}  tau={count.tau} = {dec.multiplier}*{p.n}*{dec.a}^2"
            f"  div_n={checks['divisible_by_n']}  cube={checks['cube_bound']}"
        )
        _emit(rec, args.json, text)
    return status


def cmd_asymptotic(args) -> int:
    k, l = args.k, args.l
    root = mahler_constant(k, l, precision_bits=args.precision)
    integral = mahler_integral(k, l)
    diff = abs(root.value - integral.value)
    agree = bool(diff <= root.error_bound + integral.error_bound)
    rec = {
        "k": k,
        "l": l,
        "precision_bits": args.precision,
        "constant": mpmath.nstr(root.value, 30),
        "constant_error_bound": mpmath.nstr(root.error_bound, 5),
        "integral": mpmath.nstr(integral.value, 30),
        "integral_error_bound": mpmath.nstr(integral.error_bound, 5),
        "agree": agree,
    }
    lines = [
        f"A({k},{l}) root product  = {mpmath.nstr(root.value, 30)}  "
        f"(err <= {mpmath.nstr(root.error_bound, 5)})",
        f"A({k},{l}) Mahler integral = {mpmath.nstr(integral.value, 30)}  "
        f"(err <= {mpmath.nstr(integral.error_bound, 5)})",
        f"4-decimal value: {mpmath.nstr(root.value, 5)}",
        f"routes agree within bounds: {agree}",
    ]
    if args.ratio_at is not None:
        p = normalize(args.ratio_at, k, l)
        count = tree_count_resultant(p)
        ratio = asymptotic_ratio(p, count, root)
        rec["ratio_at"] = {
            "n": p.n,
            "tau": str(count.tau),
            "ratio": mpmath.nstr(ratio.value, 20),
            "error_bound": mpmath.nstr(ratio.error_bound, 5),
        }
        lines.append(
            f"ratio at n={p.n}: {mpmath.nstr(ratio.value, 20)} "
            f"(err <= {mpmath.nstr(ratio.error_bound, 5)})"
        )
    _emit(rec, args.json, "\n".join(lines))
    return EXIT_OK if agree else EXIT_INCONSISTENT


def _format_a_cell(value) -> str:
    # truncated, not rounded: the published 4-decimal table cuts digits
    scaled = int(mpmath.floor(value * 10000))
    return f"{scaled // 10000}.{scaled % 10000:04d}"


def _table_a_records() -> list[dict]:
    records = []
    for k in range(1, 9):
        for l in range(k, 10):
            if gcd(k, l) != 1:
                continue
            approx = mahler_constant(k, l, precision_bits=128)
            records.append({"k": k, "l": l, "A": _format_a_cell(approx.value)})
    return records


def _table_jac_records(k: int, l: int, n_range) -> list[dict]:
    records = []
    for n in n_range:
        p = normalize(n, k, l)
        group = jacobian_via_companion(p)
        records.append(
            {
                "n": n,
                "torsion": [str(d) for d in group.torsion],
                "tau": str(group.order),
            }
        )
    return records


def cmd_table(args) -> int:
    if args.which == "A":
        records = _table_a_records()
    elif args.which == "jac23":
        records = _table_jac_records(2, 3, range(4, 36))
    else:
        records = _table_jac_records(3, 4, range(5, 26))
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.format == "json":
            for rec in records:
                print(json.dumps(rec), file=out)
        elif args.format == "csv":
            if args.which == "A":
                print("k,l,A", file=out)
                for rec in records:
                    print(f"{rec['k']},{rec['l']},{rec['A']}", file=out)
            else:
                print("n,torsion,tau", file=out)
                for rec in records:
                    print(f"{rec['n']},{' '.join(rec['torsion'])},{rec['tau']}", file=out)
        else:
            if args.which == "A":
                cells = {(rec["k"], rec["l"]): rec["A"] for rec in records}
                header = "k\\l " + "".join(f"{l:>8}" for l in range(1, 10))
                print(header, file=out)
                for k in range(1, 9):
                    row = [f"{k:>3} "]
                    for l in range(1, 10):
                        if l < k:
                            row.append(" " * 8)
                        elif (k, l) in cells:
                            row.append(f"{cells[(k, l)]:>8}")
                        else:
                            row.append(f"{'-':>8}")
                    print("".join(row).rstrip(), file=out)
            else:
                width = max(len(str(rec["torsion"])) for rec in records)
                for rec in records:
                    torsion = "(" + ", ".join(rec["torsion"]) + ")"
                    print(f"n={rec['n']:>3}  Z^1 + {torsion:<{width}}  tau={rec['tau']}", file=out)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="igraphjac",
        description="Jacobian groups, spanning tree counts and growth constants of I-graphs I(n,k,l).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_jac = sub.add_parser("jacobian", help="invariant factors of the Jacobian group")
    p_jac.add_argument("--n", type=_parse_range, required=True, help="single value or range a..b")
    p_jac.add_argument("--k", type=int, required=True)
    p_jac.add_argument("--l", type=int, required=True)
    p_jac.add_argument(
        "--method",
        choices=["companion", "laplacian", "both", "auto"],
        default="auto",
        help="auto picks laplacian for n <= %d, companion above" % LAPLACIAN_GATE,
    )
    p_jac.add_argument("--json", action="store_true")
    p_jac.set_defaults(func=cmd_jacobian)

    p_trees = sub.add_parser("trees", help="spanning tree counts")
    p_trees.add_argument("--n", type=_parse_range, required=True, help="single value or range a..b")
    p_trees.add_argument("--k", type=int, required=True)
    p_trees.add_argument("--l", type=int, required=True)
    p_trees.add_argument(
        "--method",
        choices=["kirchhoff", "resultant", "chebyshev", "all", "auto"],
        default="auto",
        help="auto picks kirchhoff for n <= %d, resultant above" % LAPLACIAN_GATE,
    )
    p_trees.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_trees.add_argument("--json", action="store_true")
    p_trees.set_defaults(func=cmd_trees)

    p_asym = sub.add_parser("asymptotic", help="tree-growth constant A(k,l)")
    p_asym.add_argument("--k", type=int, required=True)
    p_asym.add_argument("--l", type=int, required=True)
    p_asym.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p_asym.add_argument("--ratio-at", type=int, default=None, metavar="N")
    p_asym.add_argument("--json", action="store_true")
    p_asym.set_defaults(func=cmd_asymptotic)

    p_table = sub.add_parser("table", help="regenerate a reference table")
    p_table.add_argument("--which", choices=["A", "jac23", "jac34"], required=True)
    p_table.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_table.add_argument("--out", default=None, help="write to file instead of stdout")
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PrecisionExhausted, ConvergenceFailure, ClassificationFailure, QuadratureFailure) as exc:
        print(f"precision failure: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except InternalInconsistency as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (InvalidParams, LoopError, DisconnectedError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
