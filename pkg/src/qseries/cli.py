"""Command-line front end.

Three subcommands:

* ``expand``  print the coefficient prefix of an expression;
* ``verify``  run registry items and stream their reports;
* ``scan``    tabulate a bipartition family along an arithmetic
  progression modulo m.

Exit codes are stable: 0 success, 1 verification failures, 2 expression
parse/evaluation error, 3 unknown registry filter, 4 scan budget
exceeded.  The environment variable QSERIES_DEFAULT_ORDER overrides the
built-in default order of 500.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .qexpr import EvalContext, EvalError, QSyntaxError, evaluate, parse_expr
from .series import EXACT, SeriesError, mod_ring
from .verify import family_series, run_item, select_items

# A scan needs the family series out to step*count + offset coefficients;
# beyond this cap the dense table stops being a reasonable in-memory object.
SCAN_ORDER_CAP = 2_000_000

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_EXPR_ERROR = 2
EXIT_UNKNOWN_FILTER = 3
EXIT_SCAN_BUDGET = 4


def default_order() -> int:
    raw = os.environ.get("QSERIES_DEFAULT_ORDER")
    if raw is None:
        return 500
    try:
        value = int(raw)
    except ValueError:
        return 500
    return value if value >= 1 else 500


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qseries",
        description="Truncated q-series arithmetic and congruence verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser(
        "expand", help="print the coefficient prefix of an expression")
    p_expand.add_argument("expr", help="expression text, e.g. 'f2*f15/f1^2'")
    p_expand.add_argument("--order", type=int, default=None,
                          help="number of coefficients (default 500, or "
                               "QSERIES_DEFAULT_ORDER)")
    p_expand.add_argument("--mod", type=int, default=None,
                          help="reduce coefficients modulo this value")
    p_expand.add_argument("--format", choices=("table", "json", "csv"),
                          default="table")

    p_verify = sub.add_parser(
        "verify", help="run registry items and report pass/fail")
    p_verify.add_argument("--filter", default=None,
                          help="registry id, id prefix, or tag "
                               "(e.g. 'b215', 'lemmas', 'eq-j1')")
    p_verify.add_argument("--order", type=int, default=None,
                          help="override each item's default check order")
    p_verify.add_argument("--count", type=int, default=None,
                          help="override each scan's default count")
    p_verify.add_argument("--format", choices=("table", "json", "csv"),
                          default="table")

    p_scan = sub.add_parser(
        "scan", help="tabulate B_{s,t}(p*n+r) mod m for n below a count")
    p_scan.add_argument("s", type=int)
    p_scan.add_argument("t", type=int)
    p_scan.add_argument("p", type=int)
    p_scan.add_argument("r", type=int)
    p_scan.add_argument("mod", type=int)
    p_scan.add_argument("count", type=int)
    p_scan.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")
    return parser


def cmd_expand(args: argparse.Namespace) -> int:
    order = args.order if args.order is not None else default_order()
    if order < 1:
        print("error: order must be positive", file=sys.stderr)
        return EXIT_EXPR_ERROR
    ring = mod_ring(args.mod) if args.mod else EXACT
    try:
        series = evaluate(parse_expr(args.expr), EvalContext(order, ring))
    except (QSyntaxError, EvalError, SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXPR_ERROR
    if args.format == "json":
        print(json.dumps({"expr": args.expr, "order": series.order,
                          "modulus": ring.modulus,
                          "coeffs": list(series.coeffs)}))
    elif args.format == "csv":
        print("n,c_n")
        for n, c in enumerate(series.coeffs):
            print(f"{n},{c}")
    else:
        print(" ".join(str(c) for c in series.coeffs))
    return EXIT_OK


def _report_table_row(rep) -> str:
    mark = "ok " if rep.status == "pass" else "FAIL"
    extra = ""
    if rep.mismatch is not None:
        extra = f"  first mismatch: {rep.mismatch}"
    note = f"  [{rep.note}]" if rep.note else ""
    return (f"{mark}  {rep.id:<16s} order={rep.order:<6d} "
            f"{rep.millis:9.1f} ms{note}{extra}")


def cmd_verify(args: argparse.Namespace) -> int:
    items = select_items(args.filter)
    if not items:
        print(f"warning: no registry items match filter {args.filter!r}",
              file=sys.stderr)
        return EXIT_UNKNOWN_FILTER
    if args.format == "csv":
        print("id,status,order,millis,mismatch_index")
    passed = 0
    # items run in id order, so streaming keeps the output sorted
    for item in items:
        rep = run_item(item, order=args.order, count=args.count)
        passed += rep.status == "pass"
        if args.format == "json":
            print(json.dumps(rep.as_dict()), flush=True)
        elif args.format == "csv":
            idx = rep.mismatch["index"] if rep.mismatch else ""
            print(f"{rep.id},{rep.status},{rep.order},{rep.millis:.3f},{idx}",
                  flush=True)
        else:
            print(_report_table_row(rep), flush=True)
    if args.format == "table":
        print(f"{passed}/{len(items)} items passed")
    return EXIT_OK if passed == len(items) else EXIT_VERIFY_FAILED


def cmd_scan(args: argparse.Namespace) -> int:
    s, t, p, r, m, count = args.s, args.t, args.p, args.r, args.mod, args.count
    if s <= 1 or t <= 1 or p < 1 or not 0 <= r < p or m < 2 or count < 1:
        print("error: need s,t > 1, p >= 1, 0 <= r < p, mod >= 2, count >= 1",
              file=sys.stderr)
        return EXIT_EXPR_ERROR
    need = p * (count - 1) + r + 1
    if need > SCAN_ORDER_CAP:
        print(f"error: scan needs series order {need}, above the cap of "
              f"{SCAN_ORDER_CAP}; lower the count", file=sys.stderr)
        return EXIT_SCAN_BUDGET
    series = family_series(s, t, m, need)
    residues = [series.coeffs[p * n + r] for n in range(count)]
    all_zero = all(v == 0 for v in residues)
    if args.format == "json":
        print(json.dumps({"s": s, "t": t, "p": p, "r": r, "mod": m,
                          "count": count, "residues": residues,
                          "all_zero": all_zero}))
    elif args.format == "csv":
        print("n,residue")
        for n, v in enumerate(residues):
            print(f"{n},{v}")
        print(f"# all zero: {'yes' if all_zero else 'no'}")
    else:
        for n, v in enumerate(residues):
            print(f"B_{{{s},{t}}}({p}*{n}+{r}) = {v} (mod {m})")
        print(f"all zero: {'yes' if all_zero else 'no'}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "expand":
        return cmd_expand(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_scan(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
