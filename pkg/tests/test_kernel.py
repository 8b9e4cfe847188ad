"""The compiled and pure-Python kernels must agree exactly."""

import os

import pytest
from hypothesis import given, strategies as st

from qwol import _pykernel as PY
from qwol import kernel

try:
    from qwol import _ckernel as CY
except ImportError:  # extension not built
    CY = None

needs_ext = pytest.mark.skipif(CY is None, reason="compiled kernel not built")

ints = st.integers(min_value=-10**6, max_value=10**6)
int_polys = st.lists(ints, max_size=14).map(PY.trim)
nonzero_int_polys = int_polys.filter(bool)
monic_polys = st.lists(ints, min_size=1, max_size=8).map(lambda c: c + [1])


def test_backend_selected():
    if os.environ.get("QWOL_KERNEL", "").lower() == "python" or CY is None:
        assert kernel.BACKEND == "python"
    else:
        assert kernel.BACKEND == "cython"


@given(int_polys, nonzero_int_polys)
def test_pdivrem_identity(a, b):
    s, q, r = PY.pdivrem(a, b)
    assert PY.scale(a, s) == PY.add(PY.mul(q, b), r)
    assert len(r) < len(b)


@given(int_polys, monic_polys)
def test_pdivrem_monic_has_unit_scale(a, b):
    s, _, _ = PY.pdivrem(a, b)
    assert s == 1


@given(nonzero_int_polys, nonzero_int_polys)
def test_prs_gcd_divides(a, b):
    g = PY.prs_gcd(a, b)
    assert g[-1] > 0
    for x in (a, b):
        _, _, r = PY.pdivrem(x, g)
        assert r == []


@given(int_polys, monic_polys)
def test_invmod_inverts_when_defined(a, m):
    res = PY.invmod(a, m)
    g = PY.prs_gcd(a, m) if a else m
    if res is None:
        assert len(g) > 1
    else:
        num, den = res
        assert PY.rem_frac(PY.mul(a, num), den, m) == ([1], 1)


@needs_ext
@given(int_polys, int_polys, nonzero_int_polys, ints, ints)
def test_backends_agree(a, b, c, x, y):
    assert CY.mul(a, b) == PY.mul(a, b)
    assert CY.add(a, b) == PY.add(a, b)
    assert CY.sub(a, b) == PY.sub(a, b)
    assert CY.lincomb(x, a, y, b) == PY.lincomb(x, a, y, b)
    assert CY.pdivrem(a, c) == PY.pdivrem(a, c)
    assert CY.primitive(a) == PY.primitive(a)
    assert CY.derivative(a) == PY.derivative(a)
    assert CY.eval_scaled(a, x, abs(y) + 1) == PY.eval_scaled(a, x, abs(y) + 1)
    if a or c:
        assert CY.prs_gcd(a, c) == PY.prs_gcd(a, c)
    prim = PY.primitive(c)[1]
    if len(prim) > 1:
        assert CY.invmod(a, prim) == PY.invmod(a, prim)
        assert CY.rem_frac(a, abs(x) + 1, prim) == PY.rem_frac(a, abs(x) + 1, prim)
