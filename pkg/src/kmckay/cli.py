"""Command-line interface: verify, apply and table.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 computation error (pole or truncation).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import operators, product
from .expr import ExprSyntaxError, parse_symfunc
from .partitions import InvalidPartition
from .qscalar import PoleAtOne, PoleAtTOne, TruncationExceeded, limit_q1, limit_t1
from .symfunc import SymFunc, format_terms, to_basis
from .tables import KINDS, render_table
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3
DEFAULT_MAX_N = 10

OPS = ("E", "nabla", "nabla_q", "E_q", "D", "odot", "odot_q")


class UsageError(Exception):
    pass


def _restrict(f: SymFunc, field: str) -> SymFunc:
    """Coefficients at t = 1 ('q') or at q = t = 1 ('rational')."""
    out = {}
    for lam, c in f.items():
        try:
            c = limit_t1(c)
            out[lam] = limit_q1(c) if field == "rational" else c
        except (PoleAtOne, PoleAtTOne) as exc:
            raise type(exc)(f"coefficient of p[{lam.text()}]: {exc}") from None
    return SymFunc(out)


def _degree(f: SymFunc, n: Optional[int], what: str) -> int:
    ds = f.degrees()
    if len(ds) > 1:
        raise UsageError(f"{what} is not homogeneous (degrees {sorted(ds)})")
    d = ds.pop() if ds else (n or 0)
    if n is not None and d != n and f:
        raise UsageError(f"{what} has degree {d}, expected --n {n}")
    return d


def _guard(n: int, args) -> None:
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n > args.max_n and not args.allow_large:
        raise UsageError(f"n = {n} exceeds the limit {args.max_n}; pass --allow-large to override")


def cmd_apply(args) -> int:
    op = args.op
    exprs = args.exprs
    binary = op in ("odot", "odot_q")
    if len(exprs) != (2 if binary else 1):
        raise UsageError(f"{op} takes {'two expressions' if binary else 'one expression'}")
    if args.k < 1:
        raise UsageError("k must be positive")
    fs = [parse_symfunc(e, strict=args.strict) for e in exprs]
    if op in ("E", "nabla", "odot"):
        fs = [_restrict(f, "rational") for f in fs]
    elif op in ("nabla_q", "E_q", "odot_q"):
        fs = [_restrict(f, "q") for f in fs]
    for f in fs:
        for d in f.degrees():
            _guard(d, args)
    if args.n is not None:
        _guard(args.n, args)

    if op == "E":
        result = operators.E_closed(fs[0], args.k)
    elif op == "nabla":
        result = operators.nabla_closed(fs[0], args.k)
    elif op == "nabla_q":
        result = operators.nabla_q_closed(fs[0], args.k)
    elif op == "E_q":
        result = operators.E_q_closed(fs[0], args.k)
    elif op == "D":
        n = _degree(fs[0], args.n, "input")
        result = operators.op_D(fs[0], n)
    else:
        n = _degree(fs[0], args.n, "first input")
        n = _degree(fs[1], n, "second input")
        fn = product.odot if op == "odot" else product.odot_q
        result = fn(fs[0], fs[1], n)

    if args.format == "json":
        if args.basis != "p":
            raise UsageError("JSON output is only available in the p basis")
        print(json.dumps(result.to_json(), indent=2))
    else:
        print(format_terms(to_basis(result, args.basis), args.basis))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.k < 1:
        raise UsageError("k must be positive")
    _guard(args.n, args)
    extra = {}
    if args.suite == "leibniz":
        extra = {"count": args.count, "seed": args.seed}
    report = run_suite(args.suite, args.n, args.k, **extra)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args) -> int:
    if args.k < 1:
        raise UsageError("k must be positive")
    _guard(args.n, args)
    text = render_table(args.kind, args.n, args.k, args.format)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmckay", description="Exact operators and products on symmetric functions."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest degree accepted")
    common.add_argument("--allow-large", action="store_true", help="lift the degree limit")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--count", type=int, default=200, help="random pairs for the leibniz suite")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("apply", parents=[common], help="apply an operator or product")
    a.add_argument("op", choices=OPS)
    a.add_argument("exprs", nargs="+", metavar="expr")
    a.add_argument("--k", type=int, default=1)
    a.add_argument("--n", type=int, default=None)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--basis", choices=("p", "h", "m", "s"), default="p")
    a.add_argument("--strict", action="store_true", help="reject unsorted partition literals")
    a.set_defaults(func=cmd_apply)

    t = sub.add_parser("table", parents=[common], help="write a table")
    t.add_argument("kind", choices=KINDS)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, default=1)
    t.add_argument("--out", default=None, help="output path (default: standard output)")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ExprSyntaxError, InvalidPartition, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PoleAtOne, PoleAtTOne, TruncationExceeded, ZeroDivisionError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
