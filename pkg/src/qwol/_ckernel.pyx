# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``qwol._pykernel``.

Same functions, same results; coefficients stay Python ints so exactness is
unchanged.  Only the loop machinery is compiled.
"""

from math import gcd

BACKEND = "cython"


cpdef list trim(list a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list r = list(a)
    for i in range(len(b)):
        r[i] = r[i] + b[i]
    return trim(r)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i
    cdef list r = list(a)
    if len(r) < len(b):
        r.extend([0] * (len(b) - len(r)))
    for i in range(len(b)):
        r[i] = r[i] - b[i]
    return trim(r)


cpdef list lincomb(object ca, list a, object cb, list b):
    """Return ``ca*a + cb*b``."""
    cdef Py_ssize_t i
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list r = [0] * n
    if ca:
        for i in range(len(a)):
            r[i] = ca * a[i]
    if cb:
        for i in range(len(b)):
            r[i] = r[i] + cb * b[i]
    return trim(r)


cpdef list scale(list a, object c):
    if not c:
        return []
    return [c * x for x in a]


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, la, lb
    cdef object y
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    la = len(a)
    lb = len(b)
    cdef list r = [0] * (la + lb - 1)
    for j in range(lb):
        y = b[j]
        if y:
            for i in range(la):
                r[i + j] = r[i + j] + a[i] * y
    return trim(r)


cpdef tuple pdivrem(list a, list b):
    """Pseudo-division; see the pure-Python backend for the contract."""
    cdef Py_ssize_t db = len(b) - 1
    cdef Py_ssize_t i, t, off, nq
    cdef object c, lc, s
    cdef list r = list(a)
    if len(r) <= db:
        return 1, [], r
    lc = b[db]
    nq = len(r) - db
    cdef list q = [0] * nq
    cdef bint monic = lc == 1
    s = 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        if not monic:
            if c % lc:
                for t in range(i):
                    r[t] = r[t] * lc
                for t in range(i - db + 1, nq):
                    q[t] = q[t] * lc
                s = s * lc
            else:
                c = c // lc
        off = i - db
        q[off] = c
        for t in range(db):
            r[off + t] = r[off + t] - c * b[t]
        r[i] = 0
    del r[db:]
    return s, trim(q), trim(r)


cpdef object content(list a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef tuple primitive(list a):
    if not a:
        return 0, []
    cdef object g = content(a)
    if a[len(a) - 1] < 0:
        g = -g
    if g == 1:
        return 1, list(a)
    return g, [c // g for c in a]


cpdef list derivative(list a):
    cdef Py_ssize_t i
    return trim([i * a[i] for i in range(1, len(a))])


cpdef object eval_scaled(list a, object p, object s):
    cdef object acc = 0
    cdef object sp = 1
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * p + a[i] * sp
        sp = sp * s
    return acc


cpdef list prs_gcd(list a, list b):
    if not b:
        return primitive(a)[1]
    if not a:
        return primitive(b)[1]
    cdef list r0 = primitive(a)[1]
    cdef list r1 = primitive(b)[1]
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while r1:
        r = pdivrem(r0, r1)[2]
        r0, r1 = r1, primitive(r)[1]
    return r0


cdef tuple _reduce_frac(list num, object den):
    cdef object g = gcd(content(num), den)
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den = den // g
    return num, den


cpdef tuple rem_frac(list num, object den, list m):
    cdef tuple t
    if len(num) >= len(m):
        t = pdivrem(num, m)
        num = t[2]
        den = den * t[0]
    if not num:
        return [], 1
    return _reduce_frac(num, den)


cpdef tuple mulmod(list an, object ad, list bn, object bd, list m):
    return rem_frac(mul(an, bn), ad * bd, m)


cpdef object invmod(list a, list m):
    cdef object s, c, lc_pow, s0d, s1d, td
    cdef list r0, r1, r, q, s0n, s1n, tn
    if len(a) >= len(m):
        s, _, r1 = pdivrem(a, m)
    else:
        s, r1 = 1, list(a)
    if not r1:
        return None
    r0, s0n, s0d = list(m), [], 1
    c, r1 = primitive(r1)
    s1n, s1d = _reduce_frac([s], c)
    while len(r1) > 1:
        lc_pow, q, r = pdivrem(r0, r1)
        tn = lincomb(lc_pow * s1d, s0n, -s0d, mul(q, s1n))
        tn, td = rem_frac(tn, s0d * s1d, m)
        if not r:
            return None
        c, r = primitive(r)
        r0, s0n, s0d = r1, s1n, s1d
        r1 = r
        s1n, s1d = _reduce_frac(tn, td * c)
    return _reduce_frac(s1n, s1d * r1[0])
