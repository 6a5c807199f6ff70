"""Compare the compiled and pure-Python Jacobi kernels.

    python benchmarks/bench_eigensolver.py [--repeat N]

Times random Hermitian matrices at the sizes the library meets (d x d
see-saw contractions, d^2 x d^2 witness operators) plus one full see-saw
run, once per backend.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

SIZES = (2, 3, 5, 9, 25, 49, 64)


def bench_kernel(fn, repeat):
    rng = np.random.default_rng(0)
    rows = []
    for n in SIZES:
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = x + x.conj().T
        number = max(1, 2000 // (n * n))
        t = min(timeit.repeat(lambda: fn(a, 1e-12, 100), number=number, repeat=repeat)) / number
        rows.append((n, t))
    return rows


def bench_seesaw(repeat):
    from conika import designs
    from conika.certifier import design_sum
    from conika.witnesses import seesaw_extremal_product

    n = design_sum(designs.mub_full_set(5))
    return min(timeit.repeat(lambda: seesaw_extremal_product(n, 5), number=1, repeat=repeat))


def child(repeat):
    from conika import _backend

    print(f"backend: {_backend.BACKEND}")
    for n, t in bench_kernel(_backend.jacobi_eigh, repeat):
        print(f"  eigh {n:3d}x{n:<3d} {t * 1e6:12.1f} us")
    print(f"  see-saw MUB d=5 (32 restarts) {bench_seesaw(repeat) * 1e3:10.1f} ms")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        child(args.repeat)
        return
    for pure in ("0", "1"):
        env = dict(os.environ, CONIKA_PURE_PYTHON=pure)
        subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)], env=env, check=True)


if __name__ == "__main__":
    main()
