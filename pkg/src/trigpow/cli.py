"""Command-line interface: ``python -m trigpow {poly,eval,check,triangle}``.

Exit codes: 0 success, 1 check failure or domain error, 2 usage error.
Results go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .checks import all_passed, rel_diff, run_checks, summary_lines
from .closedform import binomial_derivative
from .errors import TrigPowError
from .evaluator import Form, build_expression, evaluate, finite_difference
from .families import FAMILIES
from .render import RenderOptions, render_expression
from .triangle import REFERENCE_ROWS, product_matrix_row, second_highest_coeffs

DEFAULT_MAX_K = 64
METHODS = ("final", "intermediate", "binomial", "fd")


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _exponent(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None


def parse_point(text: str):
    """``"RE"`` gives a float, ``"RE,IM"`` a complex."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigpow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in FAMILIES]

    p = sub.add_parser("poly", help="print the derivative expression for one family and order")
    p.add_argument("--family", required=True, choices=families)
    p.add_argument("--k", required=True, type=_nonneg_int)
    p.add_argument("--form", default="final", choices=[f.value for f in Form])
    p.add_argument("--format", default="text", choices=["text", "latex", "json"])
    p.add_argument("--no-factor", action="store_true", help="do not pull a leading -1 outside")
    p.add_argument("--allow-large-k", action="store_true", help=f"permit k > {DEFAULT_MAX_K}")

    e = sub.add_parser("eval", help="evaluate a derivative numerically")
    e.add_argument("--family", required=True, choices=families)
    e.add_argument("--n", required=True, type=_exponent)
    e.add_argument("--k", required=True, type=_nonneg_int)
    e.add_argument("--x", required=True, type=parse_point, help="RE or RE,IM")
    e.add_argument("--method", default="all", choices=list(METHODS) + ["all"])
    e.add_argument("--allow-large-k", action="store_true")

    c = sub.add_parser("check", help="run the verification suite")
    c.add_argument("--max-k", type=_nonneg_int, default=12)
    c.add_argument("--max-n", type=_nonneg_int, default=8)
    c.add_argument("--tolerance", type=float, default=1e-9)
    c.add_argument("--seed", type=int, default=None, help="add random evaluation points")
    c.add_argument("--allow-large-k", action="store_true")

    t = sub.add_parser("triangle", help="print the second-highest coefficient triangle")
    t.add_argument("--rows", required=True, type=_positive_int)
    t.add_argument("--format", default="text", choices=["text", "json"])
    return parser


def _guard_k(parser, args, k):
    if k > DEFAULT_MAX_K and not args.allow_large_k:
        parser.error(f"k={k} exceeds {DEFAULT_MAX_K}; pass --allow-large-k to proceed")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def cmd_poly(args, out) -> int:
    expr = build_expression(args.family, args.k, args.form)
    opts = RenderOptions(format=args.format, factor_minus_one=not args.no_factor)
    print(render_expression(expr, opts), file=out)
    return 0


def _eval_one(method: str, args):
    if method in ("final", "intermediate"):
        return evaluate(build_expression(args.family, args.k, method), args.n, args.x)
    if method == "binomial":
        return binomial_derivative(args.family, args.n, args.k, args.x)
    if isinstance(args.x, complex):
        raise ValueError("finite differences need a real x")
    return complex(finite_difference(args.family, args.n, args.k, args.x))


def cmd_eval(args, out, err) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    values: dict[str, complex] = {}
    skipped: dict[str, str] = {}
    for m in methods:
        try:
            values[m] = _eval_one(m, args)
        except (TrigPowError, ValueError) as exc:
            if args.method != "all" or m in ("final", "intermediate"):
                print(f"error: {m}: {type(exc).__name__}: {exc}", file=err)
                return 1
            skipped[m] = f"{type(exc).__name__}: {exc}"
    x = args.x
    result = {
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "x": _pair(complex(x)),
        "values": {m: _pair(v) for m, v in values.items()},
    }
    exact = [values[m] for m in ("final", "intermediate", "binomial") if m in values]
    if len(exact) > 1:
        result["max_deviation"] = max(rel_diff(a, b) for a, b in combinations(exact, 2))
    if "fd" in values and exact:
        result["fd_deviation"] = max(rel_diff(values["fd"], a) for a in exact)
    if skipped:
        result["skipped"] = skipped
    print(json.dumps(result), file=out)
    return 0


def cmd_check(args, out, err) -> int:
    groups, notes = run_checks(args.max_k, args.max_n, args.tolerance, args.seed)
    for line in summary_lines(groups):
        print(line, file=out)
    for note in notes:
        print(note, file=out)
    ok = all_passed(groups)
    for grp in groups:
        for failure in grp.failures:
            print(f"FAIL {grp.name}: {failure}", file=err)
    print("all checks passed" if ok else "checks FAILED", file=out)
    return 0 if ok else 1


def triangle_rows(rows: int) -> list[dict]:
    out = []
    for k in range(1, rows + 1):
        product = product_matrix_row(k, "computed")
        extracted = second_highest_coeffs(k) if k >= 2 else []
        row = {"k": k, "product": product, "extracted": extracted, "match": product[1:] == extracted}
        if k <= len(REFERENCE_ROWS):
            shown = list(REFERENCE_ROWS[k - 1])
            row["reference"] = shown
            row["reference_match"] = shown == product
        out.append(row)
    return out


def cmd_triangle(args, out) -> int:
    rows = triangle_rows(args.rows)
    if args.format == "json":
        print(json.dumps(rows), file=out)
    else:
        width = max(len(str(r["product"])) for r in rows)
        for r in rows:
            line = f"{r['k']:>3}  {str(r['product']):<{width}}  {r['extracted']}"
            if not r["match"]:
                line += "  MISMATCH"
            if r.get("reference_match") is False:
                line += f"  note: reference table shows {r['reference']}"
            print(line, file=out)
    return 0 if all(r["match"] for r in rows) else 1


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("poly", "eval"):
        _guard_k(parser, args, args.k)
    if args.command == "check":
        _guard_k(parser, args, args.max_k)
    try:
        if args.command == "poly":
            return cmd_poly(args, out)
        if args.command == "eval":
            return cmd_eval(args, out, err)
        if args.command == "check":
            return cmd_check(args, out, err)
        return cmd_triangle(args, out)
    except TrigPowError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
