"""Compare the compiled and pure-Python small-field kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel on the same inputs with both backends and checks
that the outputs agree.
"""
from __future__ import annotations

import argparse
import time

from char2sl import kernels
from char2sl.fields import parse_field
from char2sl.smallfield import context


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    F2, F4 = parse_field("gf2"), parse_field("gf2e:r=2")
    c32, c24, c34 = context(F2, 3), context(F2, 4), context(F4, 3)
    gl24 = kernels.pure.enumerate_matrices(4, 2, c24.mul, c24.inv, kernels.KIND_GL, 1 << 20)
    blob = b"".join(gl24)
    binv = b"".join(kernels.pure.inverse(m, 4, 2, c24.mul, c24.inv) for m in gl24)
    a = gl24[len(gl24) // 3]
    sym_a = bytes([0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0])
    return [
        ("enumerate GL(3,2)", lambda k: k.enumerate_matrices(3, 2, c32.mul, c32.inv, kernels.KIND_GL, 1 << 20)),
        ("enumerate SL(4,2)", lambda k: k.enumerate_matrices(4, 2, c24.mul, c24.inv, kernels.KIND_SL, 1 << 20)),
        ("enumerate SL(3,4)", lambda k: k.enumerate_matrices(3, 4, c34.mul, c34.inv, kernels.KIND_SL, 1 << 20)),
        ("conj_images GL(4,2)", lambda k: k.conj_images(a, blob, binv, 4, 2, c24.mul)),
        ("congruence_images GL(4,2)", lambda k: k.congruence_images(sym_a, blob, 4, 2, c24.mul)),
        ("commuting GL(4,2)", lambda k: k.commuting(blob, a, 4, 2, c24.mul)),
        ("square_scalar GL(4,2)", lambda k: k.square_scalar(blob, 4, 2, c24.mul)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernel not built; only the pure-Python backend is available")
        return 1
    print(f"{'kernel':28s} {'python (s)':>11s} {'cython (s)':>11s} {'speedup':>8s}  agree")
    for name, fn in cases():
        tp, op = _time(lambda: fn(kernels.pure), args.repeat)
        tc, oc = _time(lambda: fn(kernels.compiled), args.repeat)
        same = (sorted(op) == sorted(oc)) if isinstance(op, (list, set)) else op == oc
        print(f"{name:28s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x  {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
