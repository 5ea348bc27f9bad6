"""Command-line front end: compute, enumerate, verify, and export.

Exit codes: 0 on success, 1 when a verification or cross-method
comparison finds a mismatch, 2 on usage or range errors.  All counts
serialize as decimal strings (they outgrow 64-bit integers quickly) and
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .core import CountTable, max_kinks
from .genfunc import closed_form, convergence_report, series_table
from .oracle import (
    DEFAULT_BRUTE_CEILING,
    backtrack_count,
    brute_force_table,
    enumerate_histories,
)
from .treedp import dp_table
from .verify import run_verification

ENV_BRUTE_CEILING = "KINKS_BRUTE_CEILING"
METHODS = ("brute", "backtrack", "dp", "gf", "closed")
FORMATS = ("csv", "json", "text")


class UsageError(Exception):
    """Bad argument or out-of-range request; maps to exit code 2."""


def _brute_ceiling() -> int:
    raw = os.environ.get(ENV_BRUTE_CEILING)
    if raw is None:
        return DEFAULT_BRUTE_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{ENV_BRUTE_CEILING} must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{ENV_BRUTE_CEILING} must be a positive integer, got {raw!r}")
    return value


# ---------------------------------------------------------------------------
# count


def _count_via(method: str, n: int, d: int, ceiling: int) -> int:
    if method == "brute":
        return brute_force_table(n, ceiling=ceiling).count(n, d)
    if method == "backtrack":
        return backtrack_count(n, d)
    if method == "dp":
        return dp_table(n).count(n, d)
    if method == "gf":
        if n < 2:
            raise UsageError("the series method starts at n = 2")
        if d > max_kinks(n):
            return 0
        return series_table(n, d).count(n, d)
    if method == "closed":
        return closed_form(n, d)
    raise UsageError(f"unknown method {method!r}")


def _applicable_methods(n: int, d: int, ceiling: int) -> list[str]:
    methods = []
    if n <= ceiling:
        methods.append("brute")
        if d <= max_kinks(n):
            methods.append("backtrack")
    methods.append("dp")
    if n >= 2:
        methods.append("gf")
    if d <= 3:
        methods.append("closed")
    return methods


def _cmd_count(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    ceiling = _brute_ceiling()
    if not args.all_methods:
        print(_count_via(args.method, args.n, args.d, ceiling))
        return 0
    values = [
        (method, _count_via(method, args.n, args.d, ceiling))
        for method in _applicable_methods(args.n, args.d, ceiling)
    ]
    for method, value in values:
        print(f"{method}: {value}")
    if len({value for _, value in values}) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# table serialization (counts as decimal strings; lossless round trips)


def _table_via(method: str, max_n: int, ceiling: int) -> CountTable:
    if method == "brute":
        return brute_force_table(max_n, ceiling=ceiling)
    if method == "backtrack":
        return CountTable(
            {
                n: tuple(backtrack_count(n, d) for d in range(max_kinks(n) + 1))
                for n in range(1, max_n + 1)
            }
        )
    if method == "dp":
        return dp_table(max_n)
    if method == "gf":
        if max_n < 2:
            raise UsageError("the series method starts at n = 2")
        return series_table(max_n, max_kinks(max_n))
    if method == "closed":
        return CountTable(
            {
                n: tuple(closed_form(n, d) for d in range(min(3, max_kinks(n)) + 1))
                for n in range(1, max_n + 1)
            }
        )
    raise UsageError(f"unknown method {method!r}")


def _export_lengths(table: CountTable, n_lo: int = 2) -> list[int]:
    return [n for n in table.lengths() if n >= n_lo]


def format_table_csv(table: CountTable) -> str:
    lines = ["n,d,count"]
    for n in _export_lengths(table):
        lines.extend(f"{n},{d},{c}" for d, c in enumerate(table.row(n)))
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str) -> CountTable:
    lines = text.strip("\n").split("\n")
    if not lines or lines[0] != "n,d,count":
        raise ValueError("missing n,d,count header")
    cells: dict[int, dict[int, int]] = {}
    for line in lines[1:]:
        n_str, d_str, c_str = line.split(",")
        cells.setdefault(int(n_str), {})[int(d_str)] = int(c_str)
    rows = {}
    for n, by_d in cells.items():
        if sorted(by_d) != list(range(len(by_d))):
            raise ValueError(f"row {n} has gaps in its d values")
        rows[n] = tuple(by_d[d] for d in range(len(by_d)))
    return CountTable(rows)


def format_table_json(table: CountTable) -> str:
    payload = {
        "rows": [
            {"n": n, "counts": [str(c) for c in table.row(n)]}
            for n in _export_lengths(table)
        ]
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_table_json(text: str) -> CountTable:
    data = json.loads(text)
    return CountTable(
        {int(row["n"]): tuple(int(c) for c in row["counts"]) for row in data["rows"]}
    )


def _poly_text(row: tuple[int, ...]) -> str:
    terms = []
    for d, c in enumerate(row):
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append(f"{c} v")
        else:
            terms.append(f"{c} v^{d}")
    return " + ".join(terms)


def format_table_text(table: CountTable) -> str:
    width = len(str(table.max_n))
    return "".join(
        f"n={n:>{width}}: {_poly_text(table.row(n))}\n" for n in _export_lengths(table)
    )


_TABLE_FORMATTERS = {
    "csv": format_table_csv,
    "json": format_table_json,
    "text": format_table_text,
}


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}")


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    table = _table_via(args.method, args.max_n, _brute_ceiling())
    _write_output(_TABLE_FORMATTERS[args.format](table), args.output)
    return 0


# ---------------------------------------------------------------------------
# enumerate


def format_word(word: tuple[int, ...]) -> str:
    """Digits run together up to n = 9, comma-separated beyond."""
    if len(word) <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be nonnegative")
    for history in enumerate_histories(args.n, args.d, args.limit):
        print(format_word(history.word))
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(
        max_n_brute=args.max_n_brute,
        max_n_dp=args.max_n_dp,
        t_order=args.t_order,
        v_order=args.v_order,
        brute_ceiling=_brute_ceiling(),
    )
    failed = 0
    for result in results:
        if result.passed:
            print(f"PASS {result.name}")
        else:
            failed += 1
            print(f"FAIL {result.name}: {result.detail}")
    print(f"{len(results)} checks, {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# asym


def _format_deviation(value: Fraction) -> str:
    return "0" if value == 0 else f"{float(value):.6g}"


def _cmd_asym(args: argparse.Namespace) -> int:
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    start = 2 * args.d + 1 if args.d else 1
    if args.max_n < start:
        raise UsageError(f"counts at d = {args.d} start at n = {start}")
    rows = convergence_report(args.d, args.max_n)
    if args.format == "csv":
        lines = ["n,exact,estimate,deviation"]
        lines.extend(
            f"{r.n},{r.exact},{int(r.estimate)},{_format_deviation(r.deviation)}"
            for r in rows
        )
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        payload = {
            "d": args.d,
            "rows": [
                {
                    "n": r.n,
                    "exact": str(r.exact),
                    "estimate": str(int(r.estimate)),
                    "deviation": _format_deviation(r.deviation),
                }
                for r in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        width = max(len(str(rows[-1].exact)), len("exact"))
        lines = [f"{'n':>4} {'exact':>{width}} {'estimate':>{width}} deviation"]
        lines.extend(
            f"{r.n:>4} {r.exact:>{width}} {int(r.estimate):>{width}} "
            f"{_format_deviation(r.deviation)}"
            for r in rows
        )
        text = "\n".join(lines) + "\n"
    _write_output(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# parser and entry points


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinks",
        description="Exact counting and enumeration of chain flip histories by kink number.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="exact count of histories at one (n, d)")
    count.add_argument("--n", type=int, required=True, help="chain length")
    count.add_argument("--d", type=int, required=True, help="kink count")
    count.add_argument("--method", choices=METHODS, default="dp")
    count.add_argument(
        "--all-methods",
        action="store_true",
        help="print one line per applicable method; exit 1 if they disagree",
    )
    count.set_defaults(func=_cmd_count)

    table = sub.add_parser("table", help="export the count table for n = 2..max-n")
    table.add_argument("--max-n", type=int, required=True)
    table.add_argument("--method", choices=METHODS, default="dp")
    table.add_argument("--format", choices=FORMATS, default="csv")
    table.add_argument("--output", "-o", metavar="PATH", help="write here instead of stdout")
    table.set_defaults(func=_cmd_table)

    enum = sub.add_parser("enumerate", help="list the histories at one (n, d)")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--d", type=int, required=True)
    enum.add_argument("--limit", type=int, help="stop after this many histories")
    enum.set_defaults(func=_cmd_enumerate)

    verify = sub.add_parser("verify", help="run the cross-validation suite")
    verify.add_argument("--max-n-brute", type=int, default=9)
    verify.add_argument("--max-n-dp", type=int, default=60)
    verify.add_argument("--t-order", type=int, default=20)
    verify.add_argument("--v-order", type=int, default=6)
    verify.set_defaults(func=_cmd_verify)

    asym = sub.add_parser("asym", help="exact counts against the growth estimate")
    asym.add_argument("--d", type=int, required=True)
    asym.add_argument("--max-n", type=int, required=True)
    asym.add_argument("--format", choices=FORMATS, default="csv")
    asym.add_argument("--output", "-o", metavar="PATH", help="write here instead of stdout")
    asym.set_defaults(func=_cmd_asym)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code (0 ok, 1 mismatch, 2 usage)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
