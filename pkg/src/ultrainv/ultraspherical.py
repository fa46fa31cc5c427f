"""Classical ultraspherical polynomials P_n^(a,a) and their standard identities.

``ultra_def1`` is the constructor the rest of the package uses.  The other two
expansions are kept as independent cross-checks and share no code path with
it beyond the polynomial ring.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import DomainError, Poly, Scalar, gen_binomial, pochhammer

_HALF_XM1 = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x - 1)/2
_XM1 = Poly((-1, 1))
_XP1 = Poly((1, 1))
_ONE_MINUS_X2 = Poly((1, 0, -1))


def _powers(base: Poly, n: int) -> list[Poly]:
    out = [Poly.const(1)]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


@lru_cache(maxsize=None)
def _def1(n: int, alpha: Fraction) -> Poly:
    pw = _powers(_HALF_XM1, n)
    out = Poly()
    for k in range(n + 1):
        c = (
            pochhammer(n + 2 * alpha + 1, k)
            / factorial(k)
            * pochhammer(alpha + k + 1, n - k)
            / factorial(n - k)
        )
        out = out + pw[k] * c
    return out


def ultra_def1(n: int, alpha: Scalar) -> Poly:
    """P_n^(alpha,alpha) expanded in powers of (x-1)/2; valid for every rational alpha."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    return _def1(n, Fraction(alpha))


def ultra_def2(n: int, alpha: Scalar) -> Poly:
    """Second (x-1)/2 expansion, with negated Pochhammer arguments."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    alpha = Fraction(alpha)
    pw = _powers(_HALF_XM1, n)
    out = Poly()
    for k in range(n + 1):
        c = (
            pochhammer(-n - k - 2 * alpha, k)
            / factorial(k)
            * pochhammer(-n - alpha, n - k)
            / factorial(n - k)
        )
        out = out + pw[k] * c
    return out * (-1) ** n


def ultra_def3(n: int, alpha: Scalar) -> Poly:
    """Symmetric expansion in (x-1)^k (x+1)^(n-k)."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    alpha = Fraction(alpha)
    lo = _powers(_XM1, n)
    hi = _powers(_XP1, n)
    out = Poly()
    for k in range(n + 1):
        c = gen_binomial(n + alpha, n - k) * gen_binomial(n + alpha, k)
        out = out + lo[k] * hi[n - k] * c
    return out * Fraction(1, 2**n)


P = ultra_def1


def ultra_derivative_rhs(n: int, i: int, alpha: Scalar) -> Poly:
    """(n+2a+1)_i / 2^i * P_{n-i}^(a+i,a+i), which equals D^i P_n^(a,a)."""
    if not 0 <= i <= n:
        raise DomainError(f"derivative formula needs 0 <= i <= n, got i={i}, n={n}")
    alpha = Fraction(alpha)
    return P(n - i, alpha + i) * (pochhammer(n + 2 * alpha + 1, i) / 2**i)


def classical_ode_residual(y: Poly, n: int, alpha: Scalar) -> Poly:
    """(1-x^2) y'' - 2(a+1) x y' + n(n+2a+1) y."""
    alpha = Fraction(alpha)
    x = Poly.x()
    return (
        _ONE_MINUS_X2 * y.derivative(2)
        - x * y.derivative(1) * (2 * (alpha + 1))
        + y * (n * (n + 2 * alpha + 1))
    )


def relation_residual(rel: str, n: int, alpha: Scalar) -> Poly:
    """LHS - RHS of one of the contiguous relations ``rel1``, ``rel2``, ``rel3``."""
    if n < 2:
        raise DomainError("relations are stated for n >= 2")
    a = Fraction(alpha)
    x = Poly.x()
    if rel == "rel1":
        lhs = x * P(n, a).derivative(1) * 2
        rhs = P(n, a) * (2 * n) + P(n - 2, a + 1) * (n + a)
    elif rel == "rel2":
        lhs = P(n, a + 1) * ((n + 2 * a + 1) * (n + 2 * a + 2)) - P(n - 2, a + 1) * (
            (n + a) * (n + a + 1)
        )
        rhs = P(n, a) * (2 * (n + a + 1) * (2 * n + 2 * a + 1))
    elif rel == "rel3":
        lhs = P(n, a + 1) * (a + 1) - P(n, a) * (n + a + 1)
        rhs = _ONE_MINUS_X2 * P(n - 2, a + 2) * ((n + a + 1) / 4)
    else:
        raise ValueError(f"unknown relation {rel!r}")
    return lhs - rhs
