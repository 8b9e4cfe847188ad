"""Integer-coefficient polynomial kernels (pure Python backend).

Polynomials are plain lists of ints in ascending order with no trailing
zeros; ``[]`` is zero.  Rational polynomials are carried by callers as a
numerator list plus a positive integer denominator.

This module and ``_ckernel.pyx`` implement the same functions with the same
results; ``qwol.kernel`` picks one at import time.
"""

from math import gcd

BACKEND = "python"


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return trim(r)


def sub(a, b):
    r = list(a)
    if len(r) < len(b):
        r.extend([0] * (len(b) - len(r)))
    for i, c in enumerate(b):
        r[i] -= c
    return trim(r)


def lincomb(ca, a, cb, b):
    """Return ``ca*a + cb*b``."""
    n = max(len(a), len(b))
    r = [0] * n
    if ca:
        for i, c in enumerate(a):
            r[i] = ca * c
    if cb:
        for i, c in enumerate(b):
            r[i] += cb * c
    return trim(r)


def scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def mul(a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    r = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                r[i + j] += x * y
    return trim(r)


def pdivrem(a, b):
    """Pseudo-division of ``a`` by nonzero ``b``.

    Returns ``(s, q, r)`` with ``s*a == q*b + r`` and ``deg r < deg b``,
    where ``s`` is a power of ``lc(b)`` (``s == 1`` whenever ``b`` is monic).
    """
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return 1, [], r
    lc = b[-1]
    q = [0] * (len(r) - db)
    s = 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        if lc != 1:
            if c % lc:
                for t in range(i):
                    r[t] *= lc
                for t in range(i - db + 1, len(q)):
                    q[t] *= lc
                s *= lc
            else:
                c //= lc
        off = i - db
        q[off] = c
        for t in range(db):
            r[off + t] -= c * b[t]
        r[i] = 0
    del r[db:]
    return s, trim(q), trim(r)


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a):
    """Return ``(c, p)`` with ``a == c*p``, ``p`` primitive and ``lc(p) > 0``."""
    if not a:
        return 0, []
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, list(a)
    return g, [c // g for c in a]


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def eval_scaled(a, p, s):
    """Return ``sum a_i p**i s**(d-i)`` with ``d = len(a) - 1`` (Horner)."""
    acc = 0
    sp = 1
    for c in reversed(a):
        acc = acc * p + c * sp
        sp *= s
    return acc


def prs_gcd(a, b):
    """Primitive part of gcd(a, b) via a primitive remainder sequence."""
    if not b:
        return primitive(a)[1]
    if not a:
        return primitive(b)[1]
    r0 = primitive(a)[1]
    r1 = primitive(b)[1]
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while r1:
        _, _, r = pdivrem(r0, r1)
        r0, r1 = r1, primitive(r)[1]
    return r0


def _reduce_frac(num, den):
    g = gcd(content(num), den)
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return num, den


def rem_frac(num, den, m):
    """Reduce ``num/den`` modulo the primitive integer polynomial ``m``.

    Returns a canonical ``(num, den)`` pair of degree below ``deg m``.
    """
    if len(num) >= len(m):
        s, _, num = pdivrem(num, m)
        den *= s
    if not num:
        return [], 1
    return _reduce_frac(num, den)


def mulmod(an, ad, bn, bd, m):
    """Product of two reduced fractions ``an/ad`` and ``bn/bd`` modulo ``m``."""
    return rem_frac(mul(an, bn), ad * bd, m)


def invmod(a, m):
    """Inverse of integer polynomial ``a`` modulo primitive ``m``.

    Returns ``(num, den)`` with ``a*num/den == 1 (mod m)``, or ``None`` when
    gcd(a, m) is nonconstant.  Remainders are kept primitive; the cofactor is
    carried as an exact fraction.
    """
    s, _, r1 = pdivrem(a, m) if len(a) >= len(m) else (1, [], list(a))
    if not r1:
        return None
    # invariant: (sn/sd) * a == r (mod m) for each pair
    r0, s0n, s0d = list(m), [], 1
    s1n, s1d = [s], 1
    c, r1 = primitive(r1)
    s1n, s1d = _reduce_frac(s1n, s1d * c)
    while len(r1) > 1:
        lc_pow, q, r = pdivrem(r0, r1)
        # lc_pow*r0 - q*r1 == r  =>  cofactor lc_pow*s0 - q*s1
        tn = lincomb(lc_pow * s1d, s0n, -s0d, mul(q, s1n))
        tn, td = rem_frac(tn, s0d * s1d, m)
        if not r:
            return None
        c, r = primitive(r)
        r0, s0n, s0d = r1, s1n, s1d
        r1 = r
        s1n, s1d = _reduce_frac(tn, td * c)
    # r1 is a nonzero constant (primitive, so 1)
    return _reduce_frac(s1n, s1d * r1[0])
