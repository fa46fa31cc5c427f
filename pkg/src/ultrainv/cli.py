"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import diffeq, suites
from .exact import DomainError, PoleError, format_rational, parse_rational

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SUITE_CHOICES = [
    "inversion",
    "spec",
    "definitions",
    "relations",
    "systems",
    "telescope",
    "cc",
    "alt",
    "ode",
    "synthesis",
    "all",
]


class UsageError(Exception):
    pass


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def pos_int(text: str) -> int:
    v = nonneg_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultrainv",
        description="Differential equations for symmetric generalized ultraspherical polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha_required=True):
        p.add_argument("--alpha", type=rational_arg, required=alpha_required)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("coeffs", help="emit a_0(n), a_i, b_i, c_i")
    common(p)
    p.add_argument("--max-i", type=pos_int, default=10)
    p.add_argument("--a01", type=rational_arg, default=Fraction(0))
    p.add_argument("--n", type=nonneg_int, default=None, help="bound of the a_0(n) table")
    p.add_argument("--route", choices=("closed", "inversion"), default="closed")

    p = sub.add_parser("verify", help="run identity suites")
    common(p, alpha_required=False)
    p.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    p.add_argument("--max-i", type=nonneg_int, default=None, help="upper bound for i-indexed suites")
    p.add_argument("--n", type=nonneg_int, default=None, help="upper bound for n-indexed suites")

    p = sub.add_parser("ode-check", help="residual of the equation at one parameter point")
    common(p)
    p.add_argument("--m", type=rational_arg, required=True)
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--a01", type=rational_arg, default=Fraction(0))

    p = sub.add_parser("order", help="finite order and leading coefficient for integer alpha")
    common(p)
    p.add_argument("--probe-bound", type=pos_int, default=None)

    p = sub.add_parser("eval", help="the polynomial P_n^{a,a,M,M} and optionally its value")
    common(p)
    p.add_argument("--m", type=rational_arg, required=True)
    p.add_argument("--n", type=nonneg_int, required=True)
    p.add_argument("--x", type=rational_arg, default=None)
    return parser


def _require_alpha(alpha: Fraction) -> None:
    if alpha <= -1:
        raise UsageError(f"--alpha must exceed -1, got {format_rational(alpha)}")


def _require_m(m: Fraction) -> None:
    if m < 0:
        raise UsageError(f"--m must be nonnegative, got {format_rational(m)}")


def _emit(doc: dict, text: str, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")


# --- commands -------------------------------------------------------------------


def cmd_coeffs(args, out) -> int:
    _require_alpha(args.alpha)
    n_table = args.max_i if args.n is None else args.n
    if args.route == "inversion":
        cs = diffeq.coeffs_via_inversion(args.alpha, args.a01, args.max_i)
        a0 = [diffeq.a0_closed(n, args.alpha, args.a01) for n in range(n_table + 1)]
    else:
        cs = diffeq.coeffs_closed(args.alpha, args.a01, args.max_i, n_table)
        a0 = list(cs.a0)
    doc = {
        "alpha": format_rational(args.alpha),
        "a01": format_rational(args.a01),
        "a0": [{"n": n, "value": format_rational(v)} for n, v in enumerate(a0)],
        "coeffs": [
            {
                "i": i,
                "b": cs.b[i - 1].to_strings(),
                "c": cs.c[i - 1].to_strings(),
                "a": cs.a[i - 1].to_strings(),
            }
            for i in range(1, args.max_i + 1)
        ],
    }
    lines = [f"alpha = {doc['alpha']}", f"a01 = {doc['a01']}"]
    lines += [f"a0({n}) = {format_rational(v)}" for n, v in enumerate(a0)]
    for i in range(1, args.max_i + 1):
        lines.append(f"b{i}(x) = {cs.b[i - 1]}")
        lines.append(f"c{i}(x) = {cs.c[i - 1]}")
        lines.append(f"a{i}(x) = {cs.a[i - 1]}")
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK


def _suite_bound(name: str, args) -> int | None:
    if name in ("definitions", "relations", "systems", "telescope", "ode"):
        return args.n
    return args.max_i


def cmd_verify(args, out) -> int:
    if args.alpha is None:
        alphas = suites.ALPHA_GRID
    else:
        _require_alpha(args.alpha)
        alphas = (args.alpha,)
        if args.suite == "all" and suites.CONTINUITY_POINT not in alphas:
            alphas = alphas + (suites.CONTINUITY_POINT,)
    names = [s for s in SUITE_CHOICES if s != "all"] if args.suite == "all" else [args.suite]
    reports = [suites.run_suite(name, alphas, _suite_bound(name, args)) for name in names]
    ok = all(r.ok for r in reports)
    first = next((r.first_failure for r in reports if not r.ok), None)
    doc = {
        "ok": ok,
        "alphas": [format_rational(a) for a in alphas],
        "suites": [
            {"name": r.name, "ok": r.ok, "passed": r.passed, "failed": len(r.failures)}
            for r in reports
        ],
        "first_failure": first.to_dict() if first else None,
    }
    lines = [r.summary() for r in reports]
    if first is not None:
        lines.append(f"first counterexample: {first}")
    lines.append("all checks passed" if ok else "verification FAILED")
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ode_check(args, out) -> int:
    _require_alpha(args.alpha)
    _require_m(args.m)
    residual = diffeq.ode_residual(args.alpha, args.m, args.n, args.a01)
    ok = residual.is_zero()
    doc = {
        "alpha": format_rational(args.alpha),
        "M": format_rational(args.m),
        "n": args.n,
        "a01": format_rational(args.a01),
        "ok": ok,
        "residual": residual.to_strings(),
    }
    _emit(doc, f"residual = {residual}", args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_order(args, out) -> int:
    a = args.alpha
    if a.denominator != 1 or a < 0:
        raise UsageError(
            "finite order requires a nonnegative integer alpha (and a0(1,alpha) = 0); "
            f"got alpha = {format_rational(a)}"
        )
    probe = args.probe_bound if args.probe_bound is not None else 2 * int(a) + 12
    order, lead = diffeq.finite_order(a, probe)
    doc = {
        "alpha": format_rational(a),
        "order": order,
        "leading": lead.to_strings(),
        "probe_bound": probe,
    }
    _emit(doc, f"order {order}\nleading c{order}(x) = {lead}", args.format, out)
    return EXIT_OK


def cmd_eval(args, out) -> int:
    _require_alpha(args.alpha)
    _require_m(args.m)
    c0, c1 = diffeq.gen_c0c1(args.n, args.alpha, args.m)
    p = diffeq.gen_poly(args.n, args.alpha, args.m)
    doc = {
        "alpha": format_rational(args.alpha),
        "M": format_rational(args.m),
        "n": args.n,
        "C0": format_rational(c0),
        "C1": format_rational(c1),
        "poly": p.to_strings(),
    }
    lines = [f"C0 = {doc['C0']}", f"C1 = {doc['C1']}", f"P(x) = {p}"]
    if args.x is not None:
        value = p(args.x)
        doc["x"] = format_rational(args.x)
        doc["value"] = format_rational(value)
        lines.append(f"P({doc['x']}) = {doc['value']}")
    _emit(doc, "\n".join(lines), args.format, out)
    return EXIT_OK


COMMANDS = {
    "coeffs": cmd_coeffs,
    "verify": cmd_verify,
    "ode-check": cmd_ode_check,
    "order": cmd_order,
    "eval": cmd_eval,
}


_RATIONAL_FLAGS = ("--alpha", "--m", "--a01", "--x")
_NEGATIVE_RATIONAL = re.compile(r"^-\d+/\d+$")


def _glue_negative_rationals(argv: Sequence[str]) -> list[str]:
    # argparse takes "-1/2" for an option; "--alpha=-1/2" sidesteps that
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _RATIONAL_FLAGS:
            nxt = next(it, None)
            if nxt is not None and _NEGATIVE_RATIONAL.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_rationals(argv))
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError, PoleError) as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except diffeq.ConsistencyError as exc:
        err.write(f"consistency failure: {exc}\n")
        return EXIT_FAIL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
