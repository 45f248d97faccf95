"""Command-line interface.

Exit status is 0 on success, 1 for domain errors (even n, inadmissible
polynomial, unusable samples, failed verification) and 2 for usage or
parse errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .curve_ring import X, Y, DomainError, check_odd
from .exact_poly import format_fraction, to_fraction
from .expressions import (
    ExpressionSyntaxError,
    MixedVariableError,
    parse_expression,
    to_curve,
    to_poly,
    variables,
)
from .gauss_knots import (
    GaussCodeError,
    format_gauss_code,
    parse_gauss_code,
    torus_diagram,
    v2,
    v3,
)
from .restriction import (
    AdmissibilityError,
    InconsistentSamples,
    InsufficientSamples,
    decompose,
    from_samples,
    verify_theorem,
)

MAX_DIAGRAM_N = 99


class UsageError(Exception):
    pass


def _parse_samples(text: str) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition(":")
        if not sep:
            raise UsageError(f"sample {item!r} is not of the form n:value")
        try:
            n = int(key)
        except ValueError:
            raise UsageError(f"sample key {key!r} is not an integer") from None
        if n in out:
            raise UsageError(f"duplicate sample key {n}")
        try:
            out[n] = to_fraction(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"sample value {value.strip()!r} is not a rational") from None
    return out


def cmd_reduce(args, out) -> int:
    node = parse_expression(args.expr)
    if "n" in variables(node):
        raise UsageError("reduce expects an expression in X and Y")
    print(to_curve(node), file=out)
    return 0


def cmd_eval(args, out) -> int:
    node = parse_expression(args.expr)
    n = check_odd(args.n)
    if "n" in variables(node):
        value = to_poly(node)(n)
    else:
        value = to_curve(node).eval_at(n)
    print(format_fraction(value), file=out)
    return 0


def cmd_decompose(args, out) -> int:
    if (args.expr is None) == (args.samples is None):
        raise UsageError("give exactly one of --expr or --samples")
    if args.expr is not None:
        node = parse_expression(args.expr)
        if variables(node) & {"X", "Y"}:
            raise UsageError("decompose expects a polynomial in n")
        result = decompose(to_poly(node))
    else:
        if args.degree is None:
            raise UsageError("--samples requires --degree")
        result = from_samples(_parse_samples(args.samples), args.degree)
    print(result, file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.max_order < 0:
        raise UsageError("--max-order must be nonnegative")
    report = verify_theorem(args.max_order)
    if args.json:
        print(json.dumps([r.as_record() for r in report]), file=out)
    else:
        for r in report:
            status = "pass" if r.passed else "FAIL"
            print(f"k={r.k} dim={r.dim} quotient_dim={r.quotient_dim} {status}", file=out)
    return 0 if all(r.passed for r in report) else 1


def cmd_invariant(args, out) -> int:
    if (args.n is None) == (args.gauss is None):
        raise UsageError("give exactly one of --n or --gauss")
    if args.n is not None:
        n = check_odd(args.n)
        if abs(n) > MAX_DIAGRAM_N:
            raise UsageError(f"|n| must be at most {MAX_DIAGRAM_N}")
        diagram = torus_diagram(n)
        print(f"n: {n}", file=out)
    else:
        diagram = parse_gauss_code(args.gauss)
    print(f"gauss: {format_gauss_code(diagram)}", file=out)
    print(f"x: {format_fraction(8 * v2(diagram))}", file=out)
    print(f"y: {format_fraction(24 * v3(diagram))}", file=out)
    return 0


def cmd_curve_samples(args, out) -> int:
    if args.min > args.max:
        raise UsageError("--min must not exceed --max")
    out.write("n,x,y\n")
    start = args.min if args.min % 2 else args.min + 1
    for n in range(start, args.max + 1, 2):
        x, y = X.eval_at(n), Y.eval_at(n)
        out.write(f"{n},{format_fraction(x)},{format_fraction(y)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-invariants",
        description="Exact algebra on Y^2 = X^3 + X^2 and knot invariants of the (n,2) torus family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="normal form of an expression in X and Y")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("eval", help="value of an expression on the torus knot (n,2)")
    p.add_argument("--expr", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("decompose", help="write a polynomial in n in the basis X^l, X^(l-1)*Y")
    p.add_argument("--expr")
    p.add_argument("--samples", help="comma-separated n:value pairs, e.g. '1:0,-1:0,3:8'")
    p.add_argument("--degree", type=int, help="degree bound for --samples")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check the filtration dimension counts")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariant", help="x and y from a Gauss diagram")
    p.add_argument("--n", type=int)
    p.add_argument("--gauss", help="Gauss code such as 'O1+ U2+ O3+ U1+ O2+ U3+'")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("curve-samples", help="points (x, y) on the curve for odd n in a range")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.set_defaults(func=cmd_curve_samples)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ExpressionSyntaxError, MixedVariableError, GaussCodeError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (DomainError, AdmissibilityError, InsufficientSamples, InconsistentSamples) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
