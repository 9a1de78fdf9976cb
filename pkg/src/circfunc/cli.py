"""Command-line interface.

Exit status: 0 when the command succeeds and every check passes, 1 when a
check fails, 2 on usage errors (bad flags, malformed expressions, bad primes).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import ffcircle, functional, supercat
from .coeff import format_rational, parse_rational
from .expr import ParseError, format_poly, parse_poly
from .reduce import canonicalize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _circle_arg(text: str) -> functional.CircleSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected r,a,b")
    try:
        r, a, b = (parse_rational(s) for s in parts)
        return functional.CircleSpec(a, b, r)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _positive(text: str) -> int:
    v = _natural(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _parse(expr: str):
    try:
        return parse_poly(expr)
    except ParseError as exc:
        raise UsageError(f"malformed expression {expr!r}: {exc}") from None


# -- commands ------------------------------------------------------------
# Each returns (record, text_lines, csv_rows or None).


def cmd_psi(args):
    p = _parse(args.expr)
    if args.circle is None:
        value = functional.psi(p)
        circle = None
    else:
        c = args.circle
        value = functional.psi_general(c, p)
        circle = [format_rational(c.r), format_rational(c.a), format_rational(c.b)]
    record = {
        "command": "psi",
        "inputs": {"expr": format_poly(p), "circle": circle},
        "results": {"value": format_rational(value)},
    }
    lines = [format_rational(value)]
    if args.expect is not None:
        ok = value == args.expect
        record["passed"] = ok
        lines.append(f"expected {format_rational(args.expect)}: {'pass' if ok else 'FAIL'}")
    rows = [["expr", "value"], [format_poly(p), format_rational(value)]]
    return record, lines, rows


def cmd_reduce(args):
    p = _parse(args.expr)
    cf = canonicalize(p)
    rho, omega = format_poly(cf.rho), format_poly(cf.omega)
    record = {
        "command": "reduce",
        "inputs": {"expr": format_poly(p)},
        "results": {"rho": rho, "omega": omega},
    }
    return record, [f"rho = {rho}", f"omega = {omega}"], [["rho", "omega"], [rho, omega]]


def cmd_table(args):
    fn = supercat.omega if args.omega else supercat.super_catalan
    kind = "Omega" if args.omega else "S"
    grid = [
        [format_rational(fn(m, n)) for n in range(args.max_n + 1)]
        for m in range(args.max_m + 1)
    ]
    record = {
        "command": "table",
        "inputs": {"kind": kind, "max_m": args.max_m, "max_n": args.max_n},
        "results": {"rows": grid},
    }
    header = ["m\\n"] + [str(n) for n in range(args.max_n + 1)]
    rows = [header] + [[str(m)] + row for m, row in enumerate(grid)]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = [f"{kind}(m, n)"] + [
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows
    ]
    return record, lines, rows


def _report_output(command, inputs, reports):
    ok = all(r.ok for r in reports)
    record = {
        "command": command,
        "inputs": inputs,
        "results": [r.to_dict() for r in reports],
        "passed": ok,
    }
    lines = []
    rows = [["report", "check", "passed", "detail"]]
    for r in reports:
        lines.append(r.summary())
        for c in r.failures:
            lines.append(f"  FAIL {c.name}: {c.detail}")
        for c in r.checks:
            rows.append([r.title, c.name, "pass" if c.passed else "fail", c.detail])
    lines.append("all pass" if ok else "FAILURES")
    return record, lines, rows


def cmd_verify(args):
    reports = [
        functional.verify_axioms(args.trials, args.max_degree, args.seed),
        functional.verify_general_circle(args.trials, args.max_degree, args.seed),
    ]
    inputs = {"trials": args.trials, "max_degree": args.max_degree, "seed": args.seed}
    return _report_output("verify", inputs, reports)


def cmd_ffcheck(args):
    if args.prime is None and args.all_primes_up_to is None:
        raise UsageError("ffcheck needs --prime or --all-primes-up-to")
    primes = []
    if args.prime is not None:
        primes.append(args.prime)
    if args.all_primes_up_to is not None:
        primes.extend(q for q in ffcircle.odd_primes_up_to(args.all_primes_up_to) if q not in primes)
    try:
        reports = [ffcircle.cross_check(p) for p in primes]
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    inputs = {"primes": primes}
    return _report_output("ffcheck", inputs, reports)


def cmd_interpret(args):
    res = supercat.interpret(args.m, args.n)
    ok = res.passed
    record = {
        "command": "interpret",
        "inputs": {"m": args.m, "n": args.n},
        "results": {
            "psi_2_00": format_rational(res.functional_value),
            "twice_S": str(res.twice_super_catalan),
        },
        "passed": ok,
    }
    lines = [
        f"psi_2,[0,0](x^{2 * args.m}*y^{2 * args.n}) = {format_rational(res.functional_value)}",
        f"2*S({args.m},{args.n}) = {res.twice_super_catalan}",
        "pass" if ok else "FAIL",
    ]
    rows = [
        ["m", "n", "psi_2_00", "twice_S", "passed"],
        [str(args.m), str(args.n), format_rational(res.functional_value), str(res.twice_super_catalan), "pass" if ok else "fail"],
    ]
    return record, lines, rows


# -- driver ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit one JSON document")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="circfunc",
        description="Circular integral functional and super Catalan numbers, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[common], help="integrate a polynomial over a circle")
    p.add_argument("expr")
    p.add_argument("--circle", type=_circle_arg, metavar="r,a,b", help="radius and centre (default 1,0,0)")
    p.add_argument("--expect", type=_rational_arg, metavar="VALUE", help="exit 1 unless the result equals VALUE")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("reduce", parents=[common], help="remainder modulo x^2 + y^2 - 1")
    p.add_argument("expr")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("table", parents=[common], help="grid of S(m,n) or Omega(m,n)")
    p.add_argument("--max-m", type=_natural, required=True)
    p.add_argument("--max-n", type=_natural, required=True)
    p.add_argument("--omega", action="store_true", help="tabulate Omega instead of S")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="randomized check of the functional's axioms")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--max-degree", type=_natural, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ffcheck", parents=[common], help="compare with the finite-field character sum")
    p.add_argument("--prime", type=int)
    p.add_argument("--all-primes-up-to", type=_natural, metavar="N")
    p.set_defaults(func=cmd_ffcheck)

    p = sub.add_parser("interpret", parents=[common], help="2 S(m,n) as an integral over the radius-2 circle")
    p.add_argument("--m", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.set_defaults(func=cmd_interpret)
    return parser


def _render(args, record, lines, rows) -> str:
    if args.json:
        return json.dumps(record, indent=2) + "\n"
    if args.csv:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        record, lines, rows = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(args, record, lines, rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if record.get("passed") is False else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
