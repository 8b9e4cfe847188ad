"""Command-line batch runner.

    qwol verify <claim> [--n RANGE] [--p RANGE] [--k RANGE] [--j RANGE]
                [--format text|csv|json] [--jobs N] [--fail-fast] [--out FILE]

Exit status: 0 if every verdict holds, 1 on any failed verdict, 2 on usage
or range-parse errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from . import verifier as V
from .arith import is_prime
from .errors import EmptyRange, ParseError
from .report import FORMATS, CheckReport, format_report

_RANGE_ITEM = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(spec: str) -> list:
    """Parse ``"A..B"``, ``"A"`` or a comma list of those, with optional ``:primes``."""
    if not isinstance(spec, str) or not spec.strip():
        raise ParseError(f"empty range spec {spec!r}")
    body, sep, suffix = spec.partition(":")
    if sep and suffix.strip() != "primes":
        raise ParseError(f"unknown range filter {suffix!r} in {spec!r}")
    values = set()
    for item in body.split(","):
        m = _RANGE_ITEM.match(item)
        if not m:
            raise ParseError(f"malformed range item {item!r} in {spec!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) is not None else lo
        if hi < lo:
            raise EmptyRange(f"range {item.strip()!r} is empty")
        values.update(range(lo, hi + 1))
    if sep:
        values = {v for v in values if is_prime(v)}
    return sorted(values)


# claim -> (checker, axes); a checker takes the parameter unpacked
CLAIMS = {
    "theorem1": (V.theorem1_check, ("n",)),
    "theorem2": (V.theorem2_check, ("n",)),
    "shi-pan": (V.shi_pan_probe, ("p",)),
    "lemma-logderiv": (V.lemma_b1_check, ("n", "k")),
    "lemma-ln-identity": (V.lemma_b2_check, ("n",)),
    "derivative-facts": (V.derivative_facts_check, ("n",)),
    "ramanujan": (V.ramanujan_oracle_check, ("j", "n")),
    "classical": (V.classical_wolstenholme_check, ("p",)),
    "cyclotomic-sanity": (V.cyclotomic_sanity_check, ("n",)),
}

DEFAULT_RANGES = {
    "theorem1": {"n": "2..300"},
    "theorem2": {"n": "2..150"},
    "shi-pan": {"p": "5..50:primes"},
    "lemma-logderiv": {"n": "2..100", "k": "1..6"},
    "lemma-ln-identity": {"n": "2..300"},
    "derivative-facts": {"n": "2..200"},
    "ramanujan": {"n": "2..80"},
    "classical": {"p": "5..499:primes"},
    "cyclotomic-sanity": {"n": "1..500"},
}


def claim_parameters(claim: str, ranges: dict) -> list:
    """Expand range specs into the sorted parameter list for ``claim``.

    ``ranges`` maps an axis to a spec string or an already parsed list;
    missing axes fall back to the defaults.  For ``ramanujan`` a missing
    ``j`` axis means ``1..n`` for each ``n``.
    """
    _, axes = CLAIMS[claim]
    merged = dict(DEFAULT_RANGES[claim])
    merged.update({a: r for a, r in ranges.items() if r is not None and a in axes})
    values = {a: parse_range(r) if isinstance(r, str) else sorted(set(r)) for a, r in merged.items()}
    if claim == "ramanujan":
        js = values.get("j")
        return sorted((j, n) for n in values["n"] for j in (js if js is not None else range(1, n + 1)))
    if len(axes) == 1:
        return values[axes[0]]
    return sorted((n, k) for n in values["n"] for k in values["k"])


def _run_case(claim: str, param) -> V.CongruenceVerdict:
    check, _ = CLAIMS[claim]
    try:
        return check(*param) if isinstance(param, tuple) else check(param)
    except Exception as exc:  # reported as a failed verdict, never aborts the batch
        return V.CongruenceVerdict.failure(claim, param, f"error: {type(exc).__name__}: {exc}")


def run_verify(
    claim: str,
    params: list,
    jobs: int = 1,
    fail_fast: bool = False,
    timing: bool = False,
) -> CheckReport:
    """Run ``claim`` over ``params`` and collect a report in parameter order."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}")
    params = sorted(params)
    start = time.perf_counter()
    verdicts = []
    if jobs <= 1 or len(params) <= 1:
        for p in params:
            v = _run_case(claim, p)
            verdicts.append(v)
            if fail_fast and not v.holds:
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_case, claim, p) for p in params]
            for fut in futures:
                v = fut.result()
                verdicts.append(v)
                if fail_fast and not v.holds:
                    for f in futures:
                        f.cancel()
                    break
    elapsed = int((time.perf_counter() - start) * 1000) if timing else 0
    return CheckReport(__version__, claim, params, verdicts, elapsed)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _default_jobs() -> int:
    env = os.environ.get("QWOL_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwol", description="Exact q-Wolstenholme claim verifier")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    vp = sub.add_parser("verify", help="check a claim over a parameter range")
    vp.add_argument("claim", choices=sorted(CLAIMS) + ["all"])
    for axis in ("n", "p", "k", "j"):
        vp.add_argument(f"--{axis}", metavar="RANGE", help='e.g. "2..50", "7", "5,7,11", "2..99:primes"')
    vp.add_argument("--format", choices=FORMATS, default="text")
    vp.add_argument("--jobs", type=_positive_int, default=_default_jobs())
    vp.add_argument("--fail-fast", action="store_true")
    vp.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical output)")
    vp.add_argument("--out", metavar="FILE")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ranges = {"n": args.n, "p": args.p, "k": args.k, "j": args.j}
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    try:
        plans = [(c, claim_parameters(c, ranges)) for c in claims]
    except ParseError as exc:
        parser.error(str(exc))

    chunks = []
    ok = True
    for claim, params in plans:
        report = run_verify(claim, params, jobs=args.jobs, fail_fast=args.fail_fast, timing=args.timing)
        chunks.append(format_report(report, args.format))
        ok = ok and report.all_hold
        if args.fail_fast and not report.all_hold:
            break
    payload = b"".join(chunks)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
