import io
import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from ultrainv import cli, diffeq
from ultrainv.exact import Poly, format_rational, parse_rational


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_coeffs_json_c2():
    code, out, _ = run("coeffs", "--alpha", "0", "--max-i", "2", "--a01", "0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["alpha"] == "0" and doc["a01"] == "0"
    c2 = next(e for e in doc["coeffs"] if e["i"] == 2)
    assert c2["c"] == ["6", "0", "-6"]


def test_coeffs_a1():
    code, out, _ = run("coeffs", "--alpha", "0", "--max-i", "1", "--a01", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["coeffs"][0]["a"] == ["0", "-1"]
    assert [e["n"] for e in doc["a0"]] == [0, 1]


def test_coeffs_text():
    code, out, _ = run("coeffs", "--alpha", "0", "--max-i", "2", "--a01", "1")
    assert code == 0
    assert "a1(x) = -x" in out
    assert "c2(x) = -6*x^2 + 6" in out


def test_coeffs_routes_agree():
    _, closed, _ = run("coeffs", "--alpha", "1/3", "--max-i", "6", "--a01", "2", "--format", "json")
    _, inv, _ = run(
        "coeffs", "--alpha", "1/3", "--max-i", "6", "--a01", "2", "--format", "json", "--route", "inversion"
    )
    assert json.loads(closed) == json.loads(inv)


@pytest.mark.parametrize(
    "argv",
    [
        ("coeffs", "--alpha", "-2"),
        ("coeffs", "--alpha", "-1"),
        ("coeffs", "--alpha", "0.5"),
        ("coeffs", "--alpha", "1/0"),
        ("coeffs",),
        ("ode-check", "--alpha", "0", "--m", "-1", "--n", "2"),
        ("ode-check", "--alpha", "0", "--m", "1", "--n", "-2"),
        ("verify", "--suite", "nope"),
        ("order", "--alpha", "1/2"),
        ("order", "--alpha", "-1/2"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""


def test_alpha_error_message():
    code, _, err = run("coeffs", "--alpha", "-2")
    assert code == 2 and "alpha" in err


def test_order_error_mentions_requirements():
    _, _, err = run("order", "--alpha", "1/2")
    assert "nonnegative integer" in err and "a0(1,alpha) = 0" in err


def test_negative_rational_flags():
    code, out, _ = run("ode-check", "--alpha", "-1/2", "--m", "3", "--n", "7", "--a01", "1")
    assert code == 0 and out.strip() == "residual = 0"
    code, _, _ = run("ode-check", "--alpha=-1/4", "--m", "1", "--n", "3", "--a01", "-2/3")
    assert code == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("--alpha", "0", "--m", "1", "--n", "6", "--a01", "0"),
        ("--alpha", "1/2", "--m", "0", "--n", "4", "--a01", "5"),
        ("--alpha", "-1/2", "--m", "3", "--n", "7", "--a01", "1"),
    ],
)
def test_ode_check_passes(argv):
    code, out, _ = run("ode-check", *argv, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["residual"] == []


def corrupt_c3(monkeypatch):
    real = diffeq.c_coeff
    monkeypatch.setattr(
        diffeq, "c_coeff", lambda i, a: real(i, a) + Poly((0, 1)) if i == 3 else real(i, a)
    )


def test_ode_check_fails_on_corrupted_coefficient(monkeypatch):
    corrupt_c3(monkeypatch)
    code, out, _ = run("ode-check", "--alpha", "0", "--m", "1", "--n", "5", "--a01", "0", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False and doc["residual"]


def test_verify_fails_on_corrupted_coefficient(monkeypatch):
    corrupt_c3(monkeypatch)
    code, out, _ = run("verify", "--suite", "alt", "--alpha", "1/2", "--max-i", "4")
    assert code == 1
    assert "first counterexample: c*" in out and "i=3" in out


def test_verify_inversion():
    code, out, _ = run("verify", "--suite", "inversion", "--alpha", "1/2", "--max-i", "12")
    assert code == 0
    assert "inversion: PASS (91/91)" in out


def test_verify_cc_continuity_point():
    code, _, _ = run("verify", "--suite", "cc", "--alpha", "-1/2")
    assert code == 0


def test_verify_all_with_alpha_keeps_continuity_point():
    code, out, _ = run("verify", "--suite", "all", "--alpha", "1", "--max-i", "4", "--n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["alphas"] == ["1", "-1/2"]
    assert {s["name"] for s in doc["suites"]} == set(cli.SUITE_CHOICES) - {"all"}
    assert doc["first_failure"] is None


def test_order():
    code, out, _ = run("order", "--alpha", "0")
    assert code == 0
    assert out.splitlines()[0] == "order 4"
    code, out, _ = run("order", "--alpha", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == 8
    lead = Poly.from_strings(doc["leading"])
    assert lead == Poly((-1, 0, 1)) ** 4 * Fraction(-4 * 7, 40320)


def test_eval():
    code, out, _ = run("eval", "--alpha", "0", "--m", "1", "--n", "1", "--x", "1/2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    # (1+2M)(a+1)x at M = 1, a = 0
    assert doc["poly"] == ["0", "3"]
    assert doc["value"] == "3/2"


def _rational_strings(obj):
    if isinstance(obj, str):
        yield obj
    elif isinstance(obj, list):
        for v in obj:
            yield from _rational_strings(v)
    elif isinstance(obj, dict):
        for k, v in obj.items():
            if k not in ("name",):
                yield from _rational_strings(v)


def test_json_round_trip():
    _, out, _ = run("coeffs", "--alpha", "7/3", "--max-i", "8", "--a01", "-2", "--n", "12", "--format", "json")
    doc = json.loads(out)
    strings = list(_rational_strings(doc))
    assert strings
    for s in strings:
        assert format_rational(parse_rational(s)) == s


def test_text_and_json_agree():
    argv = ("coeffs", "--alpha", "-1/4", "--max-i", "5", "--a01", "3/2")
    _, text, _ = run(*argv)
    _, js, _ = run(*argv, "--format", "json")
    doc = json.loads(js)
    for entry in doc["a0"]:
        assert f"a0({entry['n']}) = {entry['value']}" in text
    for entry in doc["coeffs"]:
        i = entry["i"]
        for key in ("a", "b", "c"):
            assert f"{key}{i}(x) = {Poly.from_strings(entry[key])}" in text


def test_subprocess_exit_codes():
    ok = subprocess.run(
        [sys.executable, "-m", "ultrainv", "order", "--alpha", "1"], capture_output=True, text=True
    )
    assert ok.returncode == 0 and re.match(r"order 6", ok.stdout)
    bad = subprocess.run(
        [sys.executable, "-m", "ultrainv", "coeffs", "--alpha", "abc"], capture_output=True, text=True
    )
    assert bad.returncode == 2 and bad.stdout == "" and "abc" in bad.stderr
