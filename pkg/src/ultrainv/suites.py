"""Identity sweeps over parameter grids, grouped into named suites."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from . import diffeq
from .exact import Poly
from .inversion import inversion_sum, spec_sum
from .report import VerifyReport
from .ultraspherical import (
    classical_ode_residual,
    relation_residual,
    ultra_def1,
    ultra_def2,
    ultra_def3,
    ultra_derivative_rhs,
)

ALPHA_GRID: tuple[Fraction, ...] = tuple(
    Fraction(v) for v in ("-1/2", "-1/4", "0", "1/2", "1", "3", "7/3")
)
CONTINUITY_POINT = Fraction(-1, 2)
M_GRID: tuple[Fraction, ...] = tuple(Fraction(v) for v in ("0", "1/2", "1", "3", "10"))
A01_GRID: tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(-2))
INTEGER_ALPHAS = (0, 1, 2, 3)

# default upper bounds per suite
DEFAULT_BOUNDS = {
    "definitions": 12,
    "relations": 12,
    "inversion": 12,
    "spec": 12,
    "systems": 10,
    "telescope": 20,
    "cc": 12,
    "alt": 10,
    "ode": 10,
    "synthesis": 10,
}
A0_TABLE_BOUND = 30


def definitions_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("definitions")
    for a in alphas:
        for n in range(bound + 1):
            p1 = ultra_def1(n, a)
            report.check("def1=def2", p1 - ultra_def2(n, a), n=n, alpha=a)
            report.check("def1=def3", p1 - ultra_def3(n, a), n=n, alpha=a)
            report.check("sym", p1.reflect() - p1 * (-1) ** n, n=n, alpha=a)
            report.check("dv", classical_ode_residual(p1, n, a), n=n, alpha=a)
            for i in range(n + 1):
                report.check(
                    "diff", p1.derivative(i) - ultra_derivative_rhs(n, i, a), n=n, i=i, alpha=a
                )
    return report


def relations_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("relations")
    for a in alphas:
        for n in range(2, bound + 1):
            for rel in ("rel1", "rel2", "rel3"):
                report.check(rel, relation_residual(rel, n, a), n=n, alpha=a)
    return report


def inversion_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("inversion")
    for a in alphas:
        for i in range(bound + 1):
            for j in range(i + 1):
                delta = Poly.const(1 if i == j else 0)
                report.check("inv", inversion_sum(i, j, a) - delta, i=i, j=j, alpha=a)
    return report


def spec_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("spec")
    for a in alphas:
        for i in range(bound + 1):
            for j in range(i + 1):
                power = Poly.monomial(i - j, Fraction(1, factorial(i - j)))
                report.check("spec", spec_sum(i, j, a) - power, i=i, j=j, alpha=a)
    return report


def systems_suite(
    alphas: Iterable[Fraction], bound: int, a01s: Sequence[Fraction] = A01_GRID
) -> VerifyReport:
    report = VerifyReport("systems")
    for a in alphas:
        for a01 in a01s:
            report.extend(diffeq.verify_original_systems(a, a01, bound))
    return report


def telescope_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("telescope")
    for a in alphas:
        for n in range(1, bound + 1):
            for parity in ("even", "odd"):
                report.extend(diffeq.telescope_check(n, a, parity))
    return report


def cc_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("cc")
    for a in alphas:
        for i in range(2, bound + 1):
            report.extend(diffeq.cc_check(i, a))
    return report


def alt_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    report = VerifyReport("alt")
    for a in alphas:
        for i in range(1, bound + 1):
            report.check("b*", diffeq.alt_b_star(i, a) - diffeq.b_coeff(i), i=i, alpha=a)
            report.check("c*", diffeq.alt_c_star(i, a) - diffeq.c_coeff(i, a), i=i, alpha=a)
    return report


def ode_suite(
    alphas: Iterable[Fraction],
    bound: int,
    Ms: Sequence[Fraction] = M_GRID,
    a01s: Sequence[Fraction] = A01_GRID,
) -> VerifyReport:
    report = VerifyReport("ode")
    for a in alphas:
        for M in Ms:
            for a01 in a01s:
                for n in range(bound + 1):
                    report.check(
                        "DVSGP", diffeq.ode_residual(a, M, n, a01), n=n, alpha=a, M=M, a01=a01
                    )
    return report


def synthesis_suite(alphas: Iterable[Fraction], bound: int) -> VerifyReport:
    """Closed forms against the inversion route, a_0 recurrence, and the integer-alpha order."""
    report = VerifyReport("synthesis")
    alphas = list(alphas)
    for a in alphas:
        for a01 in (Fraction(0), Fraction(1)):
            inv = diffeq.coeffs_via_inversion(a, a01, bound)
            for i in range(1, bound + 1):
                p = {"i": i, "alpha": a, "a01": a01}
                report.check("b", inv.b[i - 1] - diffeq.b_coeff(i), **p)
                report.check("c", inv.c[i - 1] - diffeq.c_coeff(i, a), **p)
                report.check("a", inv.a[i - 1] - diffeq.a_coeff(i, a, a01), **p)
            rec = diffeq.a0_recurrence(A0_TABLE_BOUND, a, a01)
            for n, value in enumerate(rec):
                report.check_scalar(
                    "a0", value, diffeq.a0_closed(n, a, a01), n=n, alpha=a, a01=a01
                )
    if tuple(alphas) == ALPHA_GRID:
        integer_alphas = list(INTEGER_ALPHAS)
    else:
        integer_alphas = [int(a) for a in alphas if a.denominator == 1 and a >= 0]
    for a in integer_alphas:
        try:
            order, lead = diffeq.finite_order(a, 2 * a + 12)
        except diffeq.ConsistencyError as exc:
            report.failures.append(exc.counterexample)
            continue
        report.check("order", Poly.const(order - (2 * a + 4)), alpha=a)
    return report


SUITES: dict[str, Callable[[Iterable[Fraction], int], VerifyReport]] = {
    "definitions": definitions_suite,
    "relations": relations_suite,
    "inversion": inversion_suite,
    "spec": spec_suite,
    "systems": systems_suite,
    "telescope": telescope_suite,
    "cc": cc_suite,
    "alt": alt_suite,
    "ode": ode_suite,
    "synthesis": synthesis_suite,
}


def run_suite(name: str, alphas: Iterable[Fraction] | None = None, bound: int | None = None) -> VerifyReport:
    alphas = ALPHA_GRID if alphas is None else tuple(alphas)
    if bound is None:
        bound = DEFAULT_BOUNDS[name]
    return SUITES[name](alphas, bound)
