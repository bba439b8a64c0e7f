"""Exact polynomial and rational-function arithmetic over big integers.

Polynomials are dense integer-coefficient sequences in one indeterminate
(ascending powers).  Rational functions are stored canonically: the
common integer content of numerator and denominator is removed and the
lowest-order nonzero denominator coefficient is made positive, so
structural equality of canonical forms is well defined.  Polynomial
division/GCD is deliberately not performed; all users of this module
construct numerators and denominators that agree up to a scalar.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    last = len(coeffs)
    while last > 0 and coeffs[last - 1] == 0:
        last -= 1
    return tuple(coeffs[:last])


class Polynomial:
    """Immutable dense polynomial with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, power: int) -> "Polynomial":
        return cls((0,) * power + (c,))

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def content(self) -> int:
        """GCD of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%d*e^%d" % (c, i))
        return "Polynomial(%s)" % " + ".join(terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(tuple(c * a for a in self.coeffs))

    def shift(self, power: int) -> "Polynomial":
        """Multiply by the indeterminate raised to ``power``."""
        if self.is_zero():
            return self
        return Polynomial((0,) * power + self.coeffs)

    def truncate(self, order: int) -> "Polynomial":
        """Drop terms of degree > ``order``."""
        return Polynomial(self.coeffs[: order + 1])

    def divide_exact(self, c: int) -> "Polynomial":
        out = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise ValueError("coefficient %d not divisible by %d" % (a, c))
            out.append(q)
        return Polynomial(out)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(acc, Fraction) else Fraction(acc)


def affine_power(b: int, n: int, trunc: int | None = None) -> Polynomial:
    """Exact expansion of (1 + b*e)^n, optionally truncated at degree ``trunc``.

    Coefficients C(n, i) * b^i are built incrementally, so the cost is
    linear in the returned degree even for very large ``n``.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    top = n if trunc is None else min(n, trunc)
    out = [0] * (top + 1)
    term = 1
    for i in range(top + 1):
        out[i] = term
        term = term * (n - i) // (i + 1) * b
    return Polynomial(out)


def expand_base_powers(
    terms: Mapping[int, int], b: int, trunc: int | None = None
) -> Polynomial:
    """Expand sum_j c_j * (1 + b*e)^j into an ordinary polynomial in e.

    ``terms`` maps the exponent j to its integer coefficient c_j.  This
    keeps constructions that are sparse in the substituted base variable
    (here usually 1 - 2*e) exact and cheap.
    """
    acc = Polynomial()
    for power, c in sorted(terms.items()):
        if c:
            acc = acc + affine_power(b, power, trunc).scale(c)
    return acc


class RationalFunction:
    """Exact ratio of integer-coefficient polynomials, canonically scaled."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        g = gcd(num.content(), den.content())
        if g > 1:
            num = num.divide_exact(g)
            den = den.divide_exact(g)
        lead = next(c for c in den.coeffs if c)
        if lead < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.constant(1))

    @classmethod
    def constant(cls, value: Fraction | int) -> "RationalFunction":
        f = Fraction(value)
        return cls(Polynomial.constant(f.numerator), Polynomial.constant(f.denominator))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return "RationalFunction(%r / %r)" % (self.num, self.den)

    # -- algebra ------------------------------------------------------------

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(self.den, self.num)

    def equivalent(self, other: "RationalFunction") -> bool:
        """Mathematical equality via cross multiplication (no canonical
        assumption); prefer ``==`` when both sides are canonical."""
        return self.num * other.den == other.num * self.den

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, x: Fraction | int) -> Fraction:
        den = self.den.evaluate(x)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at %s" % x)
        return self.num.evaluate(x) / den

    def series(self, order: int) -> tuple[Fraction, ...]:
        """Taylor coefficients around 0 up to ``order`` (den(0) must be nonzero)."""
        d0 = self.den[0]
        if d0 == 0:
            raise ZeroDivisionError("denominator vanishes at 0")
        out: list[Fraction] = []
        for i in range(order + 1):
            acc = Fraction(self.num[i])
            for j in range(1, i + 1):
                acc -= self.den[j] * out[i - j]
            out.append(acc / d0)
        return tuple(out)
