"""Cyclotomic polynomials and exact arithmetic in Q[q]/(M).

The class of ``q`` in ``Q[q]/(Phi_n)`` plays the role of a primitive n-th
root of unity: a rational function vanishes at every such root iff its
image there is zero.  Residues are carried as integer numerators over a
common denominator and reduced after every operation, so degrees never
exceed ``deg M``.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import kernel as K
from .arith import divisors, euler_phi
from .errors import InternalError, InvalidArgument, NotInvertible
from .polynomial import Polynomial, to_rational


def q_integer(n: int) -> Polynomial:
    """[n] = 1 + q + ... + q^(n-1)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n!r}")
    return Polynomial._from_frac([1] * n)


_cyclotomic_cache: dict = {}
_cyclotomic_lock = threading.Lock()


def _cyclotomic_ints(n: int) -> list:
    try:
        return _cyclotomic_cache[n]
    except KeyError:
        pass
    if n == 1:
        result = [-1, 1]
    else:
        prod = [1]
        for d in divisors(n)[:-1]:
            prod = K.mul(prod, _cyclotomic_ints(d))
        qn1 = [-1] + [0] * (n - 1) + [1]
        s, quo, rem = K.pdivrem(qn1, prod)
        if rem or s != 1:
            raise InternalError(f"q^{n} - 1 not exactly divisible while building Phi_{n}")
        result = quo
        if len(result) - 1 != euler_phi(n):
            raise InternalError(f"deg Phi_{n} != phi({n})")
    with _cyclotomic_lock:
        return _cyclotomic_cache.setdefault(n, result)


def cyclotomic(n: int) -> Polynomial:
    """n-th cyclotomic polynomial, from q^n - 1 divided by Phi_d over d | n, d < n."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n!r}")
    return Polynomial._from_frac(list(_cyclotomic_ints(n)))


def wolstenholme_modulus(n: int) -> Polynomial:
    """[n] * Phi_n(q)."""
    if not isinstance(n, int) or n < 2:
        raise InvalidArgument(f"n must be >= 2, got {n!r}")
    return q_integer(n) * cyclotomic(n)


class QuotientContext:
    """The ring Q[q]/(modulus) for a fixed nonconstant modulus."""

    __slots__ = ("modulus", "monic_modulus", "_m", "degree")

    def __init__(self, modulus: Polynomial):
        if modulus.is_constant():
            raise InvalidArgument("quotient modulus must be nonconstant")
        self.modulus = modulus
        self.monic_modulus = modulus.monic()
        self._m = K.primitive(modulus.numerators)[1]
        self.degree = modulus.degree

    def _make(self, num: list, den: int) -> ResidueClass:
        num, den = K.rem_frac(num, den, self._m)
        return ResidueClass(self, tuple(num), den)

    def reduce(self, p: Polynomial) -> ResidueClass:
        return self._make(p.numerators, p.denominator)

    __call__ = reduce

    def constant(self, c) -> ResidueClass:
        c = to_rational(c)
        return self._make([c.numerator], c.denominator)

    def power_of_q(self, k: int) -> ResidueClass:
        """Class of q^k (k >= 0)."""
        return self._make([0] * k + [1], 1)

    @property
    def zero(self) -> ResidueClass:
        return ResidueClass(self, (), 1)

    @property
    def one(self) -> ResidueClass:
        return self.constant(1)

    def __eq__(self, other):
        return isinstance(other, QuotientContext) and self.monic_modulus == other.monic_modulus

    def __hash__(self):
        return hash(self.monic_modulus)

    def __repr__(self):
        return f"QuotientContext({self.modulus})"


class ResidueClass:
    """Element of Q[q]/(M), stored fully reduced as ``num/den``."""

    __slots__ = ("ctx", "_num", "_den")

    def __init__(self, ctx: QuotientContext, num: tuple, den: int):
        self.ctx = ctx
        self._num = num
        self._den = den

    @property
    def representative(self) -> Polynomial:
        return Polynomial._from_frac(list(self._num), self._den)

    def is_zero(self) -> bool:
        return not self._num

    def constant_value(self):
        """The rational value if this class is a constant, else ``None``."""
        if len(self._num) > 1:
            return None
        return Fraction(self._num[0], self._den) if self._num else Fraction(0)

    def _check(self, other: ResidueClass) -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise InvalidArgument("residue classes belong to different moduli")

    def _lift(self, other) -> ResidueClass:
        if isinstance(other, ResidueClass):
            self._check(other)
            return other
        if isinstance(other, Polynomial):
            return self.ctx.reduce(other)
        return self.ctx.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        num = K.lincomb(o._den, list(self._num), self._den, list(o._num))
        return self.ctx._make(num, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return ResidueClass(self.ctx, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        num, den = K.mulmod(list(self._num), self._den, list(o._num), o._den, self.ctx._m)
        return ResidueClass(self.ctx, tuple(num), den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ResidueClass:
        if e < 0:
            return residue_inv(self) ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> ResidueClass:
        return residue_inv(self)

    def __truediv__(self, other):
        return self * residue_inv(self._lift(other))

    def __rtruediv__(self, other):
        return self._lift(other) * residue_inv(self)

    def __eq__(self, other):
        if isinstance(other, ResidueClass):
            self._check(other)
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"ResidueClass({self.representative} mod {self.ctx.modulus})"


def residue_inv(a: ResidueClass) -> ResidueClass:
    """Inverse in Q[q]/(M) by the extended Euclidean algorithm."""
    if a.is_zero():
        raise NotInvertible("zero is not invertible")
    res = K.invmod(list(a._num), a.ctx._m)
    if res is None:
        raise NotInvertible(f"{a.representative} shares a factor with {a.ctx.modulus}")
    num, den = res
    # inverse of a_num/a_den is a_den * num/den
    return a.ctx._make(K.scale(num, a._den), den)
