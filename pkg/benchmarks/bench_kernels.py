"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time
from fractions import Fraction

from starhess import _pykernels
from starhess.appell import appell_alpha

try:
    from starhess import _ckernels
except ImportError:
    _ckernels = None


def _paths_workload(mod):
    # partial 3-Dyck paths of length 32 to height 0, and r=2 Lukasiewicz paths
    mod.enumerate_paths(3, 0, 32, 0, (3,))
    mod.enumerate_paths(2, 0, 12, 2, (0, 1, 2))


def _appell_matrix(r, size):
    # integer Hankel matrix of scaled Appell coefficients
    rows = []
    for i in range(size):
        row = [appell_alpha(r, i + k) for k in range(size)]
        rows.append([int(v * 729 ** r) if isinstance(v, Fraction) else v for v in row])
    return rows


def _minors_workload(mod):
    m = _appell_matrix(2, 8)
    for d in range(1, 9):
        mod.minors_of_order(m, 8, d)


WORKLOADS = {"enumerate_paths": _paths_workload, "minors_of_order (8x8, all orders)": _minors_workload}


def best_of(fn, mod, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'workload':36s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS.items():
        py = best_of(fn, _pykernels, args.repeat)
        if _ckernels is None:
            print(f"{name:36s} {py:10.3f} {'-':>10s} {'-':>8s}")
            continue
        cy = best_of(fn, _ckernels, args.repeat)
        print(f"{name:36s} {py:10.3f} {cy:10.3f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
