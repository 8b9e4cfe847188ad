"""Dense univariate polynomials over the rationals.

A :class:`Polynomial` is stored as a list of integer
numerators and one positive common denominator, kept in lowest terms.  The
public view is a tuple of :class:`fractions.Fraction` coefficients in
ascending order of degree.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from . import kernel as K
from .errors import BothZero, DivisionByZeroPolynomial

Rational = Fraction
Scalar = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Polynomial:
    """Polynomial in ``q`` with exact rational coefficients.

    ``Polynomial([1, -1, 1])`` is ``1 - q + q^2``.  The zero polynomial has no
    coefficients and degree ``None``.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        den = 1
        for c in cs:
            if c.denominator != 1:
                den = _lcm(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in cs]
        self._set(K.trim(num), den)

    def _set(self, num: list, den: int) -> None:
        if not num:
            den = 1
        else:
            g = gcd(K.content(num), den)
            if g != 1:
                num = [c // g for c in num]
                den //= g
        self._num = tuple(num)
        self._den = den

    @classmethod
    def _from_frac(cls, num: list, den: int = 1) -> Polynomial:
        """Build from integer numerators and a positive denominator."""
        self = object.__new__(cls)
        if den < 0:
            num, den = [-c for c in num], -den
        self._set(K.trim(list(num)), den)
        return self

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        c = to_rational(c)
        return cls._from_frac([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Polynomial:
        c = to_rational(c)
        return cls._from_frac([0] * k + [c.numerator], c.denominator)

    # -- views ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def numerators(self) -> list:
        """Integer numerators over :attr:`denominator` (a fresh list)."""
        return list(self._num)

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._num) - 1 if self._num else None

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def is_integral(self) -> bool:
        return self._den == 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def monic(self) -> Polynomial:
        if not self._num:
            return self
        _, prim = K.primitive(list(self._num))
        return Polynomial._from_frac(prim, prim[-1])

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._num)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> Polynomial:
        if isinstance(x, Polynomial):
            return x
        return Polynomial.constant(x)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = _lcm(self._den, o._den)
        return Polynomial._from_frac(
            K.lincomb(d // self._den, list(self._num), d // o._den, list(o._num)), d
        )

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._from_frac([-c for c in self._num], self._den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial._from_frac(
                K.mul(list(self._num), list(other._num)), self._den * other._den
            )
        try:
            c = to_rational(other)
        except TypeError:
            return NotImplemented
        return Polynomial._from_frac(K.scale(list(self._num), c.numerator), self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        c = to_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        return self * (1 / c)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, self._coerce(other))[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._num, self._den))

    def __bool__(self):
        return bool(self._num)

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def derivative(self) -> Polynomial:
        return poly_derivative(self)

    # -- serialization ----------------------------------------------------

    def to_strings(self) -> list:
        """Canonical form: ascending coefficient strings, ``"num/den"``."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> Polynomial:
        return cls(Fraction(s) for s in items)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "q" if i == 1 else f"q^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial({self.to_strings()!r})"


Q = Polynomial([0, 1])
ONE = Polynomial([1])
ZERO = Polynomial()


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divrem(a: Polynomial, b: Polynomial) -> tuple:
    """Exact division with remainder: ``a == quo*b + rem``, ``deg rem < deg b``."""
    if b.is_zero():
        raise DivisionByZeroPolynomial("polynomial division by zero")
    s, quo, rem = K.pdivrem(list(a._num), list(b._num))
    # s*a_num == quo*b_num + rem, with a = a_num/a_den and b = b_num/b_den
    return (
        Polynomial._from_frac(K.scale(quo, b._den), s * a._den),
        Polynomial._from_frac(rem, s * a._den),
    )


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    g = K.prs_gcd(list(a._num), list(b._num))
    return Polynomial._from_frac(g, g[-1])


def poly_derivative(a: Polynomial) -> Polynomial:
    return Polynomial._from_frac(K.derivative(list(a._num)), a._den)


def poly_eval(a: Polynomial, x: Scalar) -> Fraction:
    x = to_rational(x)
    if not a._num:
        return Fraction(0)
    p, s = x.numerator, x.denominator
    d = len(a._num) - 1
    return Fraction(K.eval_scaled(list(a._num), p, s), a._den * s**d)
