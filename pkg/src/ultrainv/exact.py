"""Exact scalars, dense polynomials over Q, and linear-factor ratios in alpha.

Rationals are :class:`fractions.Fraction`; everything else in the package
builds on the helpers defined here.  No floating point is used anywhere.
"""
from __future__ import annotations

import operator
import re
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


class PoleError(ArithmeticError):
    """A denominator factor vanishes at the requested parameter value."""


class DomainError(ValueError):
    """An index or parameter lies outside the range an operation is defined on."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer.  Decimal input is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q or an integer: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Scalar) -> str:
    # str(Fraction) already gives "p/q" with the sign on p, or "p" when q == 1
    return str(Fraction(value))


_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a: Scalar, b: Scalar, op: str) -> Fraction:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two rationals.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    return Fraction(fn(Fraction(a), Fraction(b)))


def pochhammer(a: Scalar, k: int) -> Fraction:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError("pochhammer index must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for m in range(k):
        out *= a + m
    return out


def gen_binomial(z: Scalar, k: int) -> Fraction:
    """Binomial coefficient (z choose k) = (z-k+1)_k / k! for rational z.

    Zero for negative k.
    """
    if k < 0:
        return Fraction(0)
    return pochhammer(Fraction(z) - k + 1, k) / factorial(k)


class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending order.

    Instances are immutable and always canonical: the trailing coefficient is
    nonzero, and the zero polynomial has an empty coefficient tuple.  The
    degree of the zero polynomial is ``None`` (standing in for minus
    infinity), so it can never leak into index arithmetic.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(parse_rational(s) for s in items)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def to_strings(self) -> list[str]:
        return [format_rational(v) for v in self._c]

    # ring operations

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-v for v in self._c)

    def __sub__(self, other) -> "Poly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(v * other for v in self._c)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, u in enumerate(self._c):
            if u == 0:
                continue
            for j, v in enumerate(other._c):
                out[i + j] += u * v
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise DomainError("negative polynomial power")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for v in reversed(self._c):
            acc = acc * x + v
        return acc

    def derivative(self, i: int = 1) -> "Poly":
        """D^i of the polynomial; zero when i exceeds the degree."""
        if i < 0:
            raise DomainError("derivative order must be nonnegative")
        c = self._c
        for _ in range(i):
            if not c:
                break
            c = tuple(k * c[k] for k in range(1, len(c)))
        return Poly(c)

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly(-v if k % 2 else v for k, v in enumerate(self._c))

    def __repr__(self) -> str:
        return f"Poly({self.to_strings()})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            v = self._c[k]
            if v == 0:
                continue
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if k == 0:
                body = format_rational(mag)
            else:
                pw = "x" if k == 1 else f"x^{k}"
                body = pw if mag == 1 else f"{format_rational(mag)}*{pw}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p: Poly, i: int) -> Poly:
    return p.derivative(i)


def poly_reflect(p: Poly) -> Poly:
    return p.reflect()


class LinFactorRatio:
    """scalar * prod(p*alpha + q) / prod(p*alpha + q), cancelled on construction.

    Each factor is normalised to ``alpha + r`` with its leading coefficient
    folded into the scalar, so that e.g. ``2*alpha + 1`` and ``alpha + 1/2``
    cancel against each other.  This lets removable singularities such as
    ``(2*alpha + 1) / (2*alpha + 1)`` at ``alpha = -1/2`` evaluate to their
    continuous value.
    """

    __slots__ = ("_num", "_den", "_scalar")

    def __init__(
        self,
        numerator: Iterable[tuple[Scalar, Scalar]] = (),
        denominator: Iterable[tuple[Scalar, Scalar]] = (),
        scalar: Scalar = 1,
    ):
        s = Fraction(scalar)
        num: Counter = Counter()
        den: Counter = Counter()
        for p, q in numerator:
            p, q = Fraction(p), Fraction(q)
            if p == 0:
                s *= q
            else:
                s *= p
                num[q / p] += 1
        for p, q in denominator:
            p, q = Fraction(p), Fraction(q)
            if p == 0:
                if q == 0:
                    raise PoleError("constant zero factor in denominator")
                s /= q
            else:
                s /= p
                den[q / p] += 1
        if s == 0:
            num.clear()
            den.clear()
        common = num & den
        num -= common
        den -= common
        self._num = num
        self._den = den
        self._scalar = s

    @classmethod
    def linear(cls, p: Scalar, q: Scalar) -> "LinFactorRatio":
        return cls([(p, q)])

    @classmethod
    def constant(cls, value: Scalar) -> "LinFactorRatio":
        return cls(scalar=value)

    @property
    def scalar(self) -> Fraction:
        return self._scalar

    @property
    def numerator_factors(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((Fraction(1), r) for r in sorted(self._num.elements()))

    @property
    def denominator_factors(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((Fraction(1), r) for r in sorted(self._den.elements()))

    def __mul__(self, other) -> "LinFactorRatio":
        if isinstance(other, (int, Fraction)):
            other = LinFactorRatio.constant(other)
        return LinFactorRatio(
            self.numerator_factors + other.numerator_factors,
            self.denominator_factors + other.denominator_factors,
            self._scalar * other._scalar,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LinFactorRatio":
        if isinstance(other, (int, Fraction)):
            other = LinFactorRatio.constant(other)
        if other._scalar == 0:
            raise PoleError("division by an identically zero ratio")
        return LinFactorRatio(
            self.numerator_factors + other.denominator_factors,
            self.denominator_factors + other.numerator_factors,
            self._scalar / other._scalar,
        )

    def evaluate(self, alpha: Scalar) -> Fraction:
        alpha = Fraction(alpha)
        den = Fraction(1)
        for r, mult in self._den.items():
            v = alpha + r
            if v == 0:
                raise PoleError(f"denominator factor alpha + {r} vanishes at alpha = {alpha}")
            den *= v**mult
        out = self._scalar
        for r, mult in self._num.items():
            out *= (alpha + r) ** mult
        return out / den

    def __repr__(self) -> str:
        return (
            f"LinFactorRatio(num={self.numerator_factors}, "
            f"den={self.denominator_factors}, scalar={self._scalar})"
        )


def linfactor_eval(r: LinFactorRatio, alpha: Scalar) -> Fraction:
    return r.evaluate(alpha)


def pochhammer_lin(p: Scalar, q: Scalar, k: int) -> LinFactorRatio:
    """(p*alpha + q)_k as a product of linear factors in alpha."""
    if k < 0:
        raise DomainError("pochhammer index must be nonnegative")
    q = Fraction(q)
    return LinFactorRatio([(p, q + m) for m in range(k)])


def binomial_lin(p: Scalar, q: Scalar, k: int) -> LinFactorRatio:
    """(p*alpha + q choose k) as a linear-factor ratio; zero for k < 0."""
    if k < 0:
        return LinFactorRatio.constant(0)
    return pochhammer_lin(p, Fraction(q) - k + 1, k) / factorial(k)
