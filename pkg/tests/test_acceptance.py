"""Exit criteria for the package.

Every check is exact rational arithmetic: the tolerance is bit-exact equality
throughout.  Run with ``pytest tests/test_acceptance.py -v`` (the summary
section lists one PASS/FAIL line per criterion) or execute this file directly.
"""
import io
import json
import random
from fractions import Fraction
from math import factorial

import pytest

from grids import ALPHAS, MS
from ultrainv import cli, diffeq
from ultrainv.exact import Poly, format_rational, parse_rational
from ultrainv.inversion import RhsSequence, apply_operator, inversion_sum, solve_system, spec_sum
from ultrainv.ultraspherical import (
    classical_ode_residual,
    relation_residual,
    ultra_def1,
    ultra_def2,
    ultra_def3,
    ultra_derivative_rhs,
)

A01_MAIN = [Fraction(0), Fraction(1), Fraction(-2)]


def test_criterion_01_inversion_identity(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for i in range(13):
            for j in range(i + 1):
                cases += 1
                bad += inversion_sum(i, j, a) != Poly.const(1 if i == j else 0)
    ok = cases == 637 and bad == 0
    criterion(1, "inversion sum = delta_ij", ok, f"{cases - bad}/{cases} exact")
    assert ok


def test_criterion_02_power_identity(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for i in range(13):
            for j in range(i + 1):
                cases += 1
                bad += spec_sum(i, j, a) != Poly.monomial(i - j, Fraction(1, factorial(i - j)))
    ok = cases == 637 and bad == 0
    criterion(2, "reflected sum = x^(i-j)/(i-j)!", ok, f"{cases - bad}/{cases} exact")
    assert ok


def test_criterion_03_main_theorem(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for M in MS:
            for a01 in A01_MAIN:
                for n in range(11):
                    cases += 1
                    bad += not diffeq.ode_residual(a, M, n, a01).is_zero()
    ok = cases == 1155 and bad == 0
    criterion(3, "differential equation residual = 0", ok, f"{cases - bad}/{cases} exact")
    assert ok


def test_criterion_04_synthesis_agreement(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for a01 in (Fraction(0), Fraction(1)):
            cs = diffeq.coeffs_via_inversion(a, a01, 10)
            for i in range(1, 11):
                cases += 1
                bad += cs.b[i - 1] != diffeq.b_coeff(i) or cs.c[i - 1] != diffeq.c_coeff(i, a)
    ok = bad == 0
    criterion(4, "inversion route = closed forms for b_i, c_i", ok, f"{cases - bad}/{cases}")
    assert ok


def test_criterion_05_a0_consistency(criterion):
    bad = 0
    for a in ALPHAS:
        for a01 in (Fraction(0), Fraction(1)):
            rec = diffeq.a0_recurrence(30, a, a01)
            bad += rec != [diffeq.a0_closed(n, a, a01) for n in range(31)]
            bad += rec[0] != 0 or rec[2] != 4 * (2 * a + 3)
    ok = bad == 0
    criterion(5, "a0 recurrence = closed form, n <= 30", ok)
    assert ok


def test_criterion_06_finite_order(criterion):
    bad = 0
    for a in range(4):
        order = 2 * a + 4
        expected = Poly((-1, 0, 1)) ** (a + 2) * Fraction(-4 * (2 * a + 3), factorial(order))
        bad += diffeq.c_coeff(order, a) != expected or expected.is_zero()
        bad += any(not diffeq.c_coeff(i, a).is_zero() for i in range(order + 1, 2 * a + 13))
        got_order, lead = diffeq.finite_order(a, 2 * a + 12)
        bad += got_order != order or lead != expected
    ok = bad == 0
    criterion(6, "order 2a+4 with the stated leading coefficient, a = 0..3", ok)
    assert ok


def test_criterion_07_cc_identity(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for i in range(2, 13):
            cases += 1
            bad += not diffeq.cc_check(i, a).ok
    ok = bad == 0
    criterion(7, "convolution identity for c_i", ok, f"{cases - bad}/{cases}")
    assert ok


def test_criterion_08_alternative_forms(criterion):
    cases = bad = 0
    for a in ALPHAS:
        for i in range(1, 11):
            cases += 1
            bad += diffeq.alt_b_star(i, a) != diffeq.b_coeff(i)
            bad += diffeq.alt_c_star(i, a) != diffeq.c_coeff(i, a)
    ok = bad == 0
    criterion(8, "unshifted-system forms = b_i, c_i", ok, f"{cases} indices")
    assert ok


def test_criterion_09_classical_layer(criterion):
    bad = 0
    for a in ALPHAS:
        for n in range(13):
            p = ultra_def1(n, a)
            bad += p != ultra_def2(n, a) or p != ultra_def3(n, a)
            bad += p.reflect() != p * (-1) ** n
            bad += not classical_ode_residual(p, n, a).is_zero()
            bad += any(p.derivative(i) != ultra_derivative_rhs(n, i, a) for i in range(n + 1))
            if n >= 2:
                bad += any(
                    not relation_residual(r, n, a).is_zero() for r in ("rel1", "rel2", "rel3")
                )
    ok = bad == 0
    criterion(9, "definitions, symmetry, derivative, classical ODE, relations", ok)
    assert ok


def test_criterion_10_systems_layer(criterion):
    bad = 0
    for a in ALPHAS:
        for a01 in A01_MAIN:
            bad += not diffeq.verify_original_systems(a, a01, 10).ok
        for n in range(1, 21):
            bad += not diffeq.telescope_check(n, a, "even").ok
            bad += not diffeq.telescope_check(n, a, "odd").ok
    ok = bad == 0
    criterion(10, "original systems n <= 10, telescoping sums n <= 20", ok)
    assert ok


def test_criterion_11_solver_round_trip(criterion):
    rng = random.Random(1155)

    def rat():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 20))

    bad = 0
    for trial in range(100):
        a = ALPHAS[trial % len(ALPHAS)]
        q = [Poly([rat() for _ in range(i + 1)]) for i in range(1, 7)]
        rhs = RhsSequence([apply_operator(q, n, a) for n in range(1, 7)], a)
        bad += list(solve_system(rhs).entries) != q
    ok = bad == 0
    criterion(11, "build-then-solve recovers 100 random coefficient sequences", ok, f"{100 - bad}/100")
    assert ok


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli.main(list(argv), out=out, err=err), out.getvalue()


def test_criterion_12_cli_contract(criterion, monkeypatch):
    passing, _ = _cli("ode-check", "--alpha", "0", "--m", "1", "--n", "6", "--a01", "0")
    malformed, _ = _cli("ode-check", "--alpha", "1.5", "--m", "1", "--n", "6")
    code, js = _cli("coeffs", "--alpha", "7/3", "--max-i", "6", "--a01", "-2", "--format", "json")
    doc = json.loads(js)
    strings = [e["value"] for e in doc["a0"]] + [doc["alpha"], doc["a01"]]
    for e in doc["coeffs"]:
        strings += e["a"] + e["b"] + e["c"]
    lossless = code == 0 and all(format_rational(parse_rational(s)) == s for s in strings)

    real = diffeq.c_coeff
    monkeypatch.setattr(
        diffeq, "c_coeff", lambda i, a: real(i, a) * 2 if i == 4 else real(i, a)
    )
    failing, _ = _cli("ode-check", "--alpha", "0", "--m", "1", "--n", "6", "--a01", "0")

    ok = (passing, failing, malformed) == (0, 1, 2) and lossless
    criterion(
        12,
        "CLI exit codes 0/1/2 and lossless JSON",
        ok,
        f"exits {passing}/{failing}/{malformed}, {len(strings)} rationals re-parsed",
    )
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
