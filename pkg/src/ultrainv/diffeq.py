"""Symmetric generalized ultraspherical polynomials and their differential equation.

The polynomials P_n^{a,a,M,M} are orthogonal for (1-x^2)^a plus equal point
masses M at x = +-1.  They satisfy

    M * sum_{i>=0} a_i(x) y^(i) + (1-x^2) y'' - 2(a+1) x y' + n(n+2a+1) y = 0

with a_0 = a_0(n, a) constant in x and a_i = a01 * b_i + c_i for i >= 1, where
a01 = a_0(1, a) is a free parameter.  This module builds the coefficients in
closed form and, independently, by inverting the derivative system they
satisfy, and checks both against each other and against the equation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import (
    DomainError,
    LinFactorRatio,
    Poly,
    Scalar,
    binomial_lin,
    gen_binomial,
    pochhammer_lin,
)
from .inversion import RhsSequence, solution_weight, solve_system
from .report import Counterexample, VerifyReport
from .ultraspherical import P, classical_ode_residual

_X = Poly.x()
_ONE_MINUS_X2 = Poly((1, 0, -1))
_X2_MINUS_1 = Poly((-1, 0, 1))


class ConsistencyError(RuntimeError):
    """An identity that must hold by construction failed; carries the counterexample."""

    def __init__(self, counterexample: Counterexample):
        super().__init__(str(counterexample))
        self.counterexample = counterexample


@dataclass(frozen=True)
class GenParams:
    alpha: Fraction
    M: Fraction
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "M", Fraction(self.M))
        check_params(self.alpha, self.M)
        if self.n < 0:
            raise DomainError("n must be nonnegative")


def check_params(alpha: Scalar, M: Scalar | None = None) -> None:
    if Fraction(alpha) <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if M is not None and Fraction(M) < 0:
        raise DomainError(f"M must be nonnegative, got {M}")


def _binom_over_2a1(n: int, alpha: Fraction) -> Fraction:
    # (n+2a choose n) / (2a+1); for n >= 1 the 2a+1 cancels
    r = binomial_lin(2, n, n) / LinFactorRatio.linear(2, 1)
    return r.evaluate(alpha)


# --- the polynomials themselves ------------------------------------------


def gen_c0c1(n: int, alpha: Scalar, M: Scalar) -> tuple[Fraction, Fraction]:
    """The two constants in P_n^{a,a,M,M} = C0 P_n^(a,a) - C1 x D P_n^(a,a).

    C1 is taken as 0 at n = 0, where it multiplies x D P_0 = 0 anyway.
    """
    a, M = Fraction(alpha), Fraction(M)
    c0 = (
        1
        + 2 * M * n / (a + 1) * gen_binomial(n + 2 * a + 1, n)
        + 4 * M**2 * gen_binomial(n + 2 * a + 1, n - 1) ** 2
    )
    if n == 0:
        return c0, Fraction(0)
    c1 = 2 * M * _binom_over_2a1(n, a) + 2 * M**2 / (a + 1) * gen_binomial(
        n + 2 * a, n - 1
    ) * gen_binomial(n + 2 * a + 1, n)
    return c0, c1


def gen_poly(n: int, alpha: Scalar, M: Scalar) -> Poly:
    c0, c1 = gen_c0c1(n, alpha, M)
    pn = P(n, Fraction(alpha))
    return pn * c0 - _X * pn.derivative(1) * c1


# --- closed forms ------------------------------------------------------------


def b0(n: int) -> Fraction:
    return Fraction(1 - (-1) ** n, 2)


def c0_scalar(n: int, alpha: Scalar) -> Fraction:
    a = Fraction(alpha)
    return 4 * (2 * a + 3) * gen_binomial(n + 2 * a + 2, n - 2)


def a0_closed(n: int, alpha: Scalar, a0_1: Scalar) -> Fraction:
    return Fraction(a0_1) * b0(n) + c0_scalar(n, alpha)


def a0_recurrence(N: int, alpha: Scalar, a0_1: Scalar) -> list[Fraction]:
    """a_0(n) for n = 0..N from the second-order difference equation."""
    a = Fraction(alpha)
    table = [Fraction(0), Fraction(a0_1)]
    for n in range(0, N - 1):
        step = 4 * (2 * n + 2 * a + 3) * gen_binomial(n + 2 * a + 2, n)
        table.append(table[n] + step)
    return table[: N + 1]


def b_coeff(i: int) -> Poly:
    """b_i(x) = 2^(i-1)/i! (-x)^i."""
    if i < 1:
        raise DomainError("b_i is a polynomial only for i >= 1")
    return Poly.monomial(i, Fraction(2 ** (i - 1) * (-1) ** i, factorial(i)))


def c_coeff(i: int, alpha: Scalar) -> Poly:
    """c_1 = 0, c_i = (2a+3)(1-x^2) 2^i/i! P_{i-2}^(a-i+3, a-i+3) for i >= 2."""
    if i < 1:
        raise DomainError("c_i is a polynomial only for i >= 1")
    if i == 1:
        return Poly()
    a = Fraction(alpha)
    scale = (2 * a + 3) * Fraction(2**i, factorial(i))
    return _ONE_MINUS_X2 * P(i - 2, a - i + 3) * scale


def a_coeff(i: int, alpha: Scalar, a0_1: Scalar) -> Poly:
    return b_coeff(i) * Fraction(a0_1) + c_coeff(i, alpha)


@dataclass(frozen=True)
class CoeffSet:
    """One member of the coefficient family, indexed from 1 for the x-dependent part.

    ``b[i-1]``, ``c[i-1]`` and ``a[i-1]`` hold b_i, c_i, a_i; ``a0[n]`` holds a_0(n).
    """

    alpha: Fraction
    a0_1: Fraction
    max_i: int
    b: tuple[Poly, ...]
    c: tuple[Poly, ...]
    a: tuple[Poly, ...]
    a0: tuple[Fraction, ...]

    def a_i(self, i: int) -> Poly:
        return self.a[i - 1]


def coeffs_closed(alpha: Scalar, a0_1: Scalar, max_i: int, n_table: int | None = None) -> CoeffSet:
    alpha, a0_1 = Fraction(alpha), Fraction(a0_1)
    n_table = max_i if n_table is None else n_table
    b = tuple(b_coeff(i) for i in range(1, max_i + 1))
    c = tuple(c_coeff(i, alpha) for i in range(1, max_i + 1))
    a = tuple(bi * a0_1 + ci for bi, ci in zip(b, c))
    a0 = tuple(a0_closed(n, alpha, a0_1) for n in range(n_table + 1))
    return CoeffSet(alpha, a0_1, max_i, b, c, a, a0)


# --- synthesis by inversion -----------------------------------------------------


def shifted_rhs(n: int, alpha: Scalar, a0_1: Scalar) -> Poly:
    """F_n = 8/(n+a+2) (n+2a+2 choose n) D^2 P_{n+2}^(a,a) - a_0(n+2) P_n^(a+1,a+1)."""
    a = Fraction(alpha)
    lead = Fraction(8) / (n + a + 2) * gen_binomial(n + 2 * a + 2, n)
    return P(n + 2, a).derivative(2) * lead - P(n, a + 1) * a0_closed(n + 2, a, a0_1)


def _solve_shifted(alpha: Fraction, a0_1: Fraction, max_i: int) -> tuple[Poly, ...]:
    f0 = shifted_rhs(0, alpha, a0_1)
    if not f0.is_zero():
        raise ConsistencyError(Counterexample("F0 = 0", {"alpha": alpha, "a01": a0_1}, f0))
    rhs = RhsSequence([shifted_rhs(n, alpha, a0_1) for n in range(1, max_i + 1)], alpha + 1)
    return solve_system(rhs).entries


def coeffs_via_inversion(alpha: Scalar, a0_1: Scalar, max_i: int) -> CoeffSet:
    """Synthesize a_i, b_i, c_i by inverting the shifted system at parameter a+1.

    The pipeline is linear in a01, so c comes from a run at a01 = 0 and b from
    the difference between runs at a01 = 1 and a01 = 0.
    """
    alpha, a0_1 = Fraction(alpha), Fraction(a0_1)
    check_params(alpha)
    c = _solve_shifted(alpha, Fraction(0), max_i)
    one = _solve_shifted(alpha, Fraction(1), max_i)
    b = tuple(u - v for u, v in zip(one, c))
    a = _solve_shifted(alpha, a0_1, max_i)
    a0 = tuple(a0_closed(n, alpha, a0_1) for n in range(max_i + 1))
    return CoeffSet(alpha, a0_1, max_i, b, c, a, a0)


# --- the differential equation -------------------------------------------------


def ode_residual(alpha: Scalar, M: Scalar, n: int, a0_1: Scalar) -> Poly:
    """Left side of the differential equation applied to y = P_n^{a,a,M,M}.

    The infinite sum stops at i = n because y^(i) = 0 beyond the degree.
    """
    a, M, a0_1 = Fraction(alpha), Fraction(M), Fraction(a0_1)
    check_params(a, M)
    y = gen_poly(n, a, M)
    extra = y * a0_closed(n, a, a0_1)
    for i in range(1, n + 1):
        ai = b_coeff(i) * a0_1 + c_coeff(i, a)
        extra = extra + ai * y.derivative(i)
    return extra * M + classical_ode_residual(y, n, a)


def verify_original_systems(alpha: Scalar, a0_1: Scalar, n: int) -> VerifyReport:
    """Check the five n-indexed systems the coefficients must satisfy, for 0..n.

    a_0 enters every system as the scalar a_0(n) of the equation's own n; the
    other coefficients come from the closed forms.
    """
    a, a0_1 = Fraction(alpha), Fraction(a0_1)
    check_params(a)
    report = VerifyReport("systems")
    coeffs = [a_coeff(i, a, a0_1) for i in range(1, n + 1)]

    def tail(target: Poly, upto: int) -> Poly:
        # sum_{i=1}^{upto} a_i D^i target
        out = Poly()
        for i in range(1, upto + 1):
            out = out + coeffs[i - 1] * target.derivative(i)
        return out

    for m in range(n + 1):
        pm = P(m, a)
        d2 = pm.derivative(2)
        a0m = a0_closed(m, a, a0_1)
        rhs1 = d2 * (4 * _binom_over_2a1(m, a)) if m >= 1 else Poly()
        params = {"n": m, "alpha": a, "a01": a0_1}

        report.check("sys1", pm * a0m + tail(pm, m) - rhs1, **params)
        report.check("sys4", tail(pm, m) - (rhs1 - pm * a0m), **params)

        lhs2 = Poly()
        for i in range(1, m + 1):
            lhs2 = lhs2 + coeffs[i - 1] * pm.derivative(i) * i
        shifted = pm.derivative(1) * a0m
        for i in range(1, m):
            shifted = shifted + coeffs[i - 1] * pm.derivative(i + 1)
        lhs2 = lhs2 + _X * shifted
        rhs2 = d2 * (4 * gen_binomial(m + 2 * a + 1, m - 1))
        report.check("sys2", lhs2 - rhs2, **params)

        if m >= 2:
            q = P(m - 2, a + 1)
            rhs3 = d2 * (Fraction(8) / (m + a) * gen_binomial(m + 2 * a, m - 2))
            report.check("sys3", q * a0m + tail(q, m - 2) - rhs3, **params)
            report.check("sys5", tail(q, m - 2) - (rhs3 - q * a0m), **params)
    return report


# --- scalar identities -----------------------------------------------------------


def stepping_residual(n: int, alpha: Scalar) -> Fraction:
    a = Fraction(alpha)
    lhs = (2 * n + 2 * a + 3) * gen_binomial(n + 2 * a + 2, n)
    rhs = (2 * a + 3) * (gen_binomial(n + 2 * a + 4, n) - gen_binomial(n + 2 * a + 2, n - 2))
    return lhs - rhs


def telescope_check(n: int, alpha: Scalar, parity: str) -> VerifyReport:
    """Closed forms of the even/odd partial sums that build a_0(n), plus the stepping identity."""
    if n < 1:
        raise DomainError("telescoping sums are stated for n >= 1")
    a = Fraction(alpha)
    report = VerifyReport("telescope")
    if parity == "even":
        lhs = sum(
            (gen_binomial(2 * k + 2 * a + 2, 2 * k) * (4 * k + 2 * a + 3) for k in range(n)),
            Fraction(0),
        )
        rhs = (2 * a + 3) * gen_binomial(2 * n + 2 * a + 2, 2 * n - 2)
    elif parity == "odd":
        lhs = sum(
            (gen_binomial(2 * k + 2 * a + 3, 2 * k + 1) * (4 * k + 2 * a + 5) for k in range(n)),
            Fraction(0),
        )
        rhs = (2 * a + 3) * gen_binomial(2 * n + 2 * a + 3, 2 * n - 1)
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    report.check_scalar(f"telescope-{parity}", lhs, rhs, n=n, alpha=a)
    for m in (n - 1, n):
        report.check_scalar("stepping", stepping_residual(m, a), 0, n=m, alpha=a)
    return report


# --- the (cc) identity and the finite-order case ---------------------------------


def cc_sides(i: int, alpha: Scalar) -> tuple[Poly, Poly]:
    if i < 2:
        raise DomainError("the identity is stated for i >= 2")
    a = Fraction(alpha)
    lhs = Poly()
    for j in range(2, i + 1):
        w = (
            LinFactorRatio.linear(2, 2 * j + 3)
            * binomial_lin(2, j + 4, j)
            / pochhammer_lin(2, j + 3, i + 1)
        ).evaluate(a)
        lhs = lhs + P(i - j, -a - i - 2) * P(j - 2, a + 3) * w
    rhs = P(i - 2, a - i + 3) * Fraction(1, factorial(i))
    return lhs, rhs


def cc_check(i: int, alpha: Scalar) -> VerifyReport:
    lhs, rhs = cc_sides(i, alpha)
    report = VerifyReport("cc")
    report.check("cc", lhs - rhs, i=i, alpha=Fraction(alpha))
    return report


def leading_coefficient(alpha: int) -> Poly:
    """-4(2a+3)/(2a+4)! (x^2-1)^(a+2), the top coefficient for integer a >= 0."""
    return _X2_MINUS_1 ** (alpha + 2) * Fraction(-4 * (2 * alpha + 3), factorial(2 * alpha + 4))


def finite_order(alpha: Scalar, probe_bound: int) -> tuple[int, Poly]:
    """Order 2a+4 and its leading coefficient c_{2a+4}, after checking c_i = 0 above it."""
    a = Fraction(alpha)
    if a.denominator != 1 or a < 0:
        raise DomainError("finite order requires a nonnegative integer alpha")
    a = int(a)
    order = 2 * a + 4
    if probe_bound < order + 1:
        raise DomainError(f"probe_bound must be at least {order + 1}")
    lead = c_coeff(order, a)
    expected = leading_coefficient(a)
    if lead != expected or lead.is_zero():
        raise ConsistencyError(Counterexample("leading", {"alpha": a, "i": order}, lead - expected))
    for i in range(order + 1, probe_bound + 1):
        ci = c_coeff(i, a)
        if not ci.is_zero():
            raise ConsistencyError(Counterexample("vanishing", {"alpha": a, "i": i}, ci))
    return order, lead


# --- the alternative route through the unshifted system ------------------------------


def alt_b_star(i: int, alpha: Scalar) -> Poly:
    if i < 1:
        raise DomainError("i must be positive")
    a = Fraction(alpha)
    out = Poly()
    for j in range(1, i + 1):
        sign = (-1) ** j - 1
        if sign == 0:
            continue
        # solution_weight carries 2^i; this route has 2^(i-1)
        w = solution_weight(i, j, a) / 2 * sign
        out = out + P(i - j, -a - i - 1) * P(j, a) * w
    return out


def alt_c_star(i: int, alpha: Scalar) -> Poly:
    if i < 1:
        raise DomainError("i must be positive")
    a = Fraction(alpha)
    out = Poly()
    for j in range(1, i + 1):
        pj = P(j, a)
        g = pj.derivative(2) * _binom_over_2a1(j, a) - pj * (
            (2 * a + 3) * gen_binomial(j + 2 * a + 2, j - 2)
        )
        w = solution_weight(i, j, a) * 4
        out = out + P(i - j, -a - i - 1) * g * w
    return out


__all__ = [
    "CoeffSet",
    "ConsistencyError",
    "GenParams",
    "a0_closed",
    "a0_recurrence",
    "a_coeff",
    "alt_b_star",
    "alt_c_star",
    "b0",
    "b_coeff",
    "c0_scalar",
    "c_coeff",
    "cc_check",
    "cc_sides",
    "check_params",
    "coeffs_closed",
    "coeffs_via_inversion",
    "finite_order",
    "gen_c0c1",
    "gen_poly",
    "leading_coefficient",
    "ode_residual",
    "shifted_rhs",
    "stepping_residual",
    "telescope_check",
    "verify_original_systems",
]
