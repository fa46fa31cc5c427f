from fractions import Fraction

import pytest

from ultrainv import suites
from ultrainv.exact import Poly
from ultrainv.report import VerifyReport


@pytest.mark.parametrize("name", sorted(suites.SUITES))
def test_each_suite_passes_at_small_bounds(name):
    report = suites.run_suite(name, [Fraction(-1, 2), Fraction(2)], 4)
    assert report.ok, report.first_failure
    assert report.passed > 0


def test_default_grid_contains_continuity_point():
    assert suites.CONTINUITY_POINT in suites.ALPHA_GRID
    assert Fraction(7, 3) in suites.ALPHA_GRID


def test_report_records_failures():
    r = VerifyReport("demo")
    assert r.check("zero", Poly())
    assert not r.check("nonzero", Poly((1, 2)), n=3, alpha=Fraction(1, 2))
    assert not r.check_scalar("scalar", 1, Fraction(1, 2), n=0)
    assert r.total == 3 and not r.ok
    d = r.to_dict()
    assert d["failures"][0] == {
        "check": "nonzero",
        "params": {"n": 3, "alpha": "1/2"},
        "residual": ["1", "2"],
    }
    assert str(r.first_failure) == "nonzero [n=3, alpha=1/2]: residual = 2*x + 1"
    assert r.summary() == "demo: FAIL (1/3)"


def test_report_extend():
    a, b = VerifyReport("a", passed=2), VerifyReport("b", passed=1)
    b.check("bad", Poly.const(1))
    a.extend(b)
    assert a.passed == 3 and len(a.failures) == 1
