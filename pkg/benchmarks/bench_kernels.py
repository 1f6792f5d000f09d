"""Numba against numpy for the elimination kernels, and end to end.

    python3 benchmarks/bench_kernels.py [--sizes 64 128 256] [--repeat 3]

Kernel timings call both code paths in one process.  The end-to-end
timings run a GS computation in subprocesses with HOPFCOHOM_NUMBA=1 and
HOPFCOHOM_NUMBA=0, since the flag is read at import time.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from hopfcohom.exactla import FieldSpec
from hopfcohom.exactla.kernels import rref_modp, rref_table

E2E = """
import time
from hopfcohom.hopfcore import group_algebra
from hopfcohom.hopfcore.groups import symmetric
from hopfcohom.homology import bialgebra_cohomology, gs
def once():
    gs._RES_CACHE.clear()
    t = time.perf_counter()
    dims = bialgebra_cohomology(group_algebra(symmetric(3), "F3"), 4).dims
    return time.perf_counter() - t, dims
cold, dims = once()
warm, _ = once()
print(cold, warm, dims)
"""


def best(f, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        f()
        times.append(time.perf_counter() - t)
    return min(times)


def kernel_rows(sizes, repeat, rng):
    F4 = FieldSpec.parse("F4")
    tables = F4.code_tables
    rows = []
    for n in sizes:
        M = rng.integers(0, 7, size=(n, n + n // 2))
        # warm the jit before timing
        rref_modp(M[:4, :4], 7, use_numba=True)
        a = best(lambda: rref_modp(M, 7, use_numba=True), repeat)
        b = best(lambda: rref_modp(M, 7, use_numba=False), repeat)
        ra, _ = rref_modp(M, 7, use_numba=True)
        rb, _ = rref_modp(M, 7, use_numba=False)
        assert np.array_equal(ra, rb), "kernels disagree"
        rows.append(("rref mod 7", n, a, b))
        T = rng.integers(0, 4, size=(n, n + n // 2))
        rref_table(T[:4, :4], tables, use_numba=True)
        a = best(lambda: rref_table(T, tables, use_numba=True), repeat)
        b = best(lambda: rref_table(T, tables, use_numba=False), repeat)
        rows.append(("rref F4 table", n, a, b))
    return rows


def end_to_end():
    out = {}
    for flag in ("1", "0"):
        env = dict(os.environ, HOPFCOHOM_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
        cold, warm, dims = res.stdout.split(maxsplit=2)
        out[flag] = (float(cold), float(warm), dims.strip())
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':16} {'n':>5} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, n, a, b in kernel_rows(args.sizes, args.repeat, rng):
        print(f"{name:16} {n:>5} {a:>10.4f} {b:>10.4f} {b / a:>8.1f}")
    if not args.skip_e2e:
        e2e = end_to_end()
        print("\nbialgebra cohomology of kS3 over F3, degrees 0..4 (cold includes jit loading)")
        for flag, label in (("1", "numba"), ("0", "numpy")):
            cold, warm, dims = e2e[flag]
            print(f"  {label:6} cold {cold:7.2f} s  warm {warm:7.2f} s  dims {dims}")
        assert e2e["1"][2] == e2e["0"][2], "paths disagree"


if __name__ == "__main__":
    main()
