"""Kernel backend selection.

The compiled ``_ckernel`` is used when importable; set ``QWOL_KERNEL=python``
to force the pure-Python backend.  Both expose identical functions.
"""

import os

if os.environ.get("QWOL_KERNEL", "").lower() == "python":
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        from . import _pykernel as _impl

BACKEND = _impl.BACKEND

trim = _impl.trim
add = _impl.add
sub = _impl.sub
lincomb = _impl.lincomb
scale = _impl.scale
mul = _impl.mul
pdivrem = _impl.pdivrem
content = _impl.content
primitive = _impl.primitive
derivative = _impl.derivative
eval_scaled = _impl.eval_scaled
prs_gcd = _impl.prs_gcd
rem_frac = _impl.rem_frac
mulmod = _impl.mulmod
invmod = _impl.invmod
