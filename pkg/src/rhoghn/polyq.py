"""Univariate polynomials with rational coefficients.

Polynomials here stand for Hilbert polynomials, so the order that matters is
the asymptotic one: ``p < q`` when ``q(n) - p(n)`` is positive for every large
enough integer ``n``.  This is the same as the sign of the highest nonzero
coefficient of the difference, so no evaluation is ever needed.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import IndexOutOfRange, NonPositiveLeading, ParseError, ZeroPolynomial

Rational = Union[int, Fraction]

# Degree reported by the zero polynomial.
ZERO_DEGREE = float("-inf")


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def parse_rational(value) -> Fraction:
    """Parse an int or a ``"num/den"`` string.  Floats are rejected."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational literal: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational literal: {value!r}") from exc
    raise ParseError(f"not a rational literal: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


class RationalPoly:
    """Immutable polynomial ``sum(coeffs[i] * n**i)`` over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Rational) -> "RationalPoly":
        return cls([c])

    @classmethod
    def binomial(cls, shift: int, d: int) -> "RationalPoly":
        """``C(n + shift, d)`` as a polynomial in ``n``."""
        p = cls([1])
        for k in range(d):
            p = p * cls([shift - k, 1])
        return p / factorial(d)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coeffs

    def coef(self, i: int) -> Fraction:
        """Monomial coefficient of ``n**i`` (zero past the degree)."""
        if i < 0:
            raise IndexOutOfRange(f"negative index {i}")
        return self._coeffs[i] if i < len(self._coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def normalized(self, i: int) -> Fraction:
        """Coefficient ``a_i`` in the expansion ``sum(a_i * n**i / i!)``."""
        return factorial(i) * self.coef(i)

    def __call__(self, n: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        k = max(len(a), len(b))
        return RationalPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(k)
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPoly(c * other for c in self._coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return RationalPoly(c / other for c in self._coeffs)
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __lt__(self, other):
        return poly_cmp(self, other) is Ordering.LT

    def __le__(self, other):
        return poly_cmp(self, other) is not Ordering.GT

    def __gt__(self, other):
        return poly_cmp(self, other) is Ordering.GT

    def __ge__(self, other):
        return poly_cmp(self, other) is not Ordering.LT

    def sign(self) -> int:
        """Eventual sign: the sign of the leading coefficient, 0 for zero."""
        if not self._coeffs:
            return 0
        return 1 if self._coeffs[-1] > 0 else -1

    def to_json(self) -> list:
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data) -> "RationalPoly":
        if not isinstance(data, list):
            raise ParseError(f"polynomial must be a list of coefficients, got {data!r}")
        return cls(parse_rational(c) for c in data)

    def __repr__(self):
        return f"RationalPoly({[format_rational(c) for c in self._coeffs]})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"({abs(c)})*{mono}" if c.denominator != 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _coerce(x):
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RationalPoly([x])
    return NotImplemented


def poly_cmp(p: RationalPoly, q: RationalPoly) -> Ordering:
    """Asymptotic comparison of two polynomials."""
    s = (p - q).sign()
    return Ordering(s)


def reduced_hp(p: RationalPoly) -> RationalPoly:
    """Divide by the normalized leading coefficient ``a_d``."""
    if p.is_zero():
        raise ZeroPolynomial("reduced polynomial of zero")
    d = p.degree
    a_d = p.normalized(d)
    if a_d <= 0:
        raise NonPositiveLeading(f"leading coefficient {a_d} is not positive")
    return p / a_d


def slope(p: RationalPoly, i: int) -> Fraction:
    """Normalized slope ``a_i / a_d``."""
    if p.is_zero():
        raise ZeroPolynomial("slope of zero polynomial")
    d = p.degree
    if i < 0 or i > d:
        raise IndexOutOfRange(f"slope index {i} outside 0..{d}")
    a_d = p.normalized(d)
    if a_d <= 0:
        raise NonPositiveLeading(f"leading coefficient {a_d} is not positive")
    return p.normalized(i) / a_d


def sum_polys(polys: Sequence[RationalPoly]) -> RationalPoly:
    acc = RationalPoly()
    for p in polys:
        acc = acc + p
    return acc
