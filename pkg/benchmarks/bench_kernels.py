"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Kernel rows time single calls on inputs taken from the real workloads;
end-to-end rows run whole checks in a subprocess with QWOL_KERNEL set.
"""

import argparse
import os
import subprocess
import sys
import timeit
from math import gcd

from qwol import _pykernel
from qwol.cyclotomic import cyclotomic, wolstenholme_modulus

try:
    from qwol import _ckernel
except ImportError:
    _ckernel = None


def kernel_cases():
    phi = cyclotomic(293).numerators
    m = wolstenholme_modulus(149).numerators
    dense = [(-1) ** i * (i * 7919 % 1009) for i in range(300)]
    units = [k for k in range(1, 149) if gcd(k, 149) == 1]
    return {
        "mul deg 299 x 299": lambda K: K.mul(dense, dense),
        "pdivrem deg 598 / Phi_293": lambda K: K.pdivrem(K.mul(dense, dense), phi),
        "invmod (1-q^k)^2 mod Phi_293": lambda K: K.invmod(K.mul([1] + [0] * 40 + [-1], [1] + [0] * 40 + [-1]), phi),
        "invmod [k] mod [149]Phi_149, all k": lambda K: [K.invmod([1] * k, m) for k in units],
    }


END_TO_END = {
    "theorem1 n=293": "from qwol.verifier import theorem1_check as f; f(293)",
    "theorem2 n=149": "from qwol.verifier import theorem2_check as f; f(149)",
    "ramanujan n=2..80": "from qwol.cli import run_verify, claim_parameters as c; run_verify('ramanujan', c('ramanujan', {}))",
}


def time_end_to_end(backend, stmt, repeat):
    code = (
        "import timeit, sys\n"
        f"t = min(timeit.repeat({stmt!r}, number=1, repeat={repeat}))\n"
        "print(t)"
    )
    env = dict(os.environ, QWOL_KERNEL=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": _pykernel}
    if _ckernel is not None:
        backends["cython"] = _ckernel
    else:
        print("compiled kernel not built; timing pure Python only")

    print(f"{'case':<40}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in kernel_cases().items():
        times = [min(timeit.repeat(lambda: fn(K), number=1, repeat=args.repeat)) for K in backends.values()]
        _row(name, times)
    for name, stmt in END_TO_END.items():
        times = [time_end_to_end("python" if b == "python" else "", stmt, args.repeat) for b in backends]
        _row(name, times)


def _row(name, times):
    speed = f"{times[0] / times[-1]:>9.2f}x" if len(times) > 1 else ""
    print(f"{name:<40}" + "".join(f"{t * 1000:>10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
