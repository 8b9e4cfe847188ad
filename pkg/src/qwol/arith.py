"""Exact number-theoretic functions.

Divisors, Moebius, Euler and Jordan totients, Ramanujan sums in closed form,
Bernoulli polynomials and signed Stirling numbers of the first kind.  All
results are ints or Fractions; nothing is approximated.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import InternalError, InvalidArgument
from .polynomial import Polynomial


def _require_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise InvalidArgument(f"{name} must be a positive integer, got {value!r}")


class FactorizationTable:
    """Memoized trial-division factorizations, safe for concurrent use."""

    def __init__(self):
        self._table = {1: ()}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> tuple:
        _require_positive("n", n)
        try:
            return self._table[n]
        except KeyError:
            pass
        pairs = []
        m, p = n, 2
        while p * p <= m:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                pairs.append((p, e))
            p += 1 if p == 2 else 2
        if m > 1:
            pairs.append((m, 1))
        result = tuple(pairs)
        with self._lock:
            self._table.setdefault(n, result)
        return result


factorize = FactorizationTable()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def divisors(n: int) -> list:
    """Sorted positive divisors of ``n``."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _require_positive("n", n)
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    _require_positive("n", n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def jordan_totient(k: int, n: int) -> int:
    """J_k(n) as the Moebius sum over divisors d of n of mu(n/d) d^k."""
    _require_positive("k", k)
    _require_positive("n", n)
    return sum(mobius(n // d) * d**k for d in divisors(n))


def ramanujan_closed(j: int, n: int) -> int:
    """Closed form phi(n) mu(n/g) / phi(n/g) with g = gcd(n, j)."""
    _require_positive("j", j)
    _require_positive("n", n)
    m = n // gcd(n, j)
    num = euler_phi(n) * mobius(m)
    den = euler_phi(m)
    value, rest = divmod(num, den)
    if rest:
        raise InternalError(f"Ramanujan closed form not integral at j={j}, n={n}")
    return value


@lru_cache(maxsize=None)
def bernoulli_number(j: int) -> Fraction:
    """B_j with the B_1 = -1/2 convention, from sum_{i<=j} C(j+1, i) B_i = 0."""
    if j < 0:
        raise InvalidArgument(f"index must be nonnegative, got {j}")
    if j == 0:
        return Fraction(1)
    acc = sum(comb(j + 1, i) * bernoulli_number(i) for i in range(j))
    return -acc / (j + 1)


@lru_cache(maxsize=None)
def bernoulli_polynomial(j: int) -> Polynomial:
    """B_j(t) = sum_i C(j, i) B_i t^(j-i)."""
    if j < 0:
        raise InvalidArgument(f"index must be nonnegative, got {j}")
    coeffs = [Fraction(0)] * (j + 1)
    for i in range(j + 1):
        coeffs[j - i] = comb(j, i) * bernoulli_number(i)
    return Polynomial(coeffs)


def bernoulli_at_one(j: int) -> Fraction:
    return bernoulli_polynomial(j)(1)


@lru_cache(maxsize=None)
def _falling_factorial(k: int) -> Polynomial:
    if k == 0:
        return Polynomial([1])
    return _falling_factorial(k - 1) * Polynomial([-(k - 1), 1])


def stirling_first(k: int, j: int) -> int:
    """Signed s(k, j): coefficient of x^j in x(x-1)...(x-k+1); 0 off-range."""
    _require_positive("k", k)
    if j < 0 or j > k:
        return 0
    c = _falling_factorial(k)[j]
    return int(c)
