"""Inversion of n-indexed derivative systems in the ultraspherical basis.

Given right-hand sides F_1..F_N, the system

    sum_{i>=1} A_i(x) D^i P_n^(a,a)(x) = F_n(x),   n = 1..N

is triangular in n (D^i P_n vanishes for i > n) and has the explicit solution
implemented by :func:`solve_system`.  That formula rests on the biorthogonality
sum computed by :func:`inversion_sum`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import DomainError, LinFactorRatio, Poly, Scalar, pochhammer_lin
from .report import VerifyReport
from .ultraspherical import P


def kernel_weight(i: int, j: int, k: int, alpha: Scalar) -> Fraction:
    """(2a+2k+1) / (2a+k+j+1)_{i-j+1}, cancelled before evaluation.

    The numerator is always one of the denominator factors (j <= k <= i), so
    the ratio stays finite at a = -1/2.
    """
    r = LinFactorRatio.linear(2, 2 * k + 1) / pochhammer_lin(2, k + j + 1, i - j + 1)
    return r.evaluate(alpha)


def _mirror(i: int, alpha: Fraction, m: int) -> Poly:
    # P_m^(-a-i-1, -a-i-1)
    return P(m, -alpha - i - 1)


def inversion_sum(i: int, j: int, alpha: Scalar) -> Poly:
    """Sum over k of weight * P_{i-k}^(-a-i-1) * P_{k-j}^(a+j); equals delta_ij."""
    if j > i or j < 0:
        raise DomainError(f"inversion sum needs 0 <= j <= i, got i={i}, j={j}")
    alpha = Fraction(alpha)
    out = Poly()
    for k in range(j, i + 1):
        w = kernel_weight(i, j, k, alpha)
        out = out + _mirror(i, alpha, i - k) * P(k - j, alpha + j) * w
    return out


def spec_sum(i: int, j: int, alpha: Scalar) -> Poly:
    """Same as :func:`inversion_sum` with the mirror factor reflected; equals x^(i-j)/(i-j)!."""
    if j > i or j < 0:
        raise DomainError(f"power sum needs 0 <= j <= i, got i={i}, j={j}")
    alpha = Fraction(alpha)
    out = Poly()
    for k in range(j, i + 1):
        w = kernel_weight(i, j, k, alpha)
        out = out + _mirror(i, alpha, i - k).reflect() * P(k - j, alpha + j) * w
    return out


@dataclass(frozen=True)
class RhsSequence:
    """F_1..F_N of the system, stored so that ``entries[n-1]`` is F_n."""

    entries: tuple[Poly, ...]
    alpha: Fraction

    def __init__(self, entries: Sequence[Poly], alpha: Scalar):
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "alpha", Fraction(alpha))

    @property
    def N(self) -> int:
        return len(self.entries)

    def __getitem__(self, n: int) -> Poly:
        # 1-based, matching the system index
        if not 1 <= n <= self.N:
            raise IndexError(n)
        return self.entries[n - 1]


@dataclass(frozen=True)
class SolutionSequence:
    """A_1..A_N, stored so that ``entries[i-1]`` is A_i."""

    entries: tuple[Poly, ...]
    alpha: Fraction

    def __init__(self, entries: Sequence[Poly], alpha: Scalar):
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "alpha", Fraction(alpha))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Poly:
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]


def solution_weight(i: int, j: int, alpha: Scalar) -> Fraction:
    """2^i (2a+2j+1) / (2a+j+1)_{i+1}."""
    r = LinFactorRatio.linear(2, 2 * j + 1) / pochhammer_lin(2, j + 1, i + 1)
    return r.evaluate(alpha) * 2**i


def solve_system(rhs: RhsSequence) -> SolutionSequence:
    """Unique A_1..A_N with sum_i A_i D^i P_n^(a,a) = F_n for n = 1..N."""
    alpha = rhs.alpha
    out = []
    for i in range(1, rhs.N + 1):
        acc = Poly()
        for j in range(1, i + 1):
            fj = rhs[j]
            if fj.is_zero():
                continue
            acc = acc + _mirror(i, alpha, i - j) * fj * solution_weight(i, j, alpha)
        out.append(acc)
    return SolutionSequence(out, alpha)


def apply_operator(coeffs: Sequence[Poly], n: int, alpha: Scalar) -> Poly:
    """sum_{i=1}^{n} A_i D^i P_n^(a,a), with ``coeffs[i-1]`` = A_i.

    Terms with i > n vanish, so the sum stops at min(n, len(coeffs)).
    """
    pn = P(n, Fraction(alpha))
    out = Poly()
    for i in range(1, min(n, len(coeffs)) + 1):
        out = out + coeffs[i - 1] * pn.derivative(i)
    return out


def verify_system(rhs: RhsSequence, sol: SolutionSequence) -> VerifyReport:
    if len(sol) != rhs.N:
        raise DomainError("solution and right-hand side lengths differ")
    report = VerifyReport("system")
    for n in range(1, rhs.N + 1):
        residual = apply_operator(sol.entries, n, rhs.alpha) - rhs[n]
        report.check("sysalg", residual, n=n, alpha=rhs.alpha)
    return report
