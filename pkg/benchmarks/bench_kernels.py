"""Compare the compiled and numpy kernels.

Run: python benchmarks/bench_kernels.py [--repeat N]

Prints per-call timings of the measured-overlap kernel for a few
subsystem shapes and the wall time of a brute-force MIN search with each
backend swapped in.
"""
import argparse
import time
import timeit

import numpy as np

from affmin import _pykernels, kernels
from affmin.measurement import SearchConfig
from affmin.measures import min_affinity
from affmin.states import bell_diagonal, random_state, random_tetrahedron_point, random_unitary, werner

try:
    from affmin import _ckernels
except ImportError:
    _ckernels = None

SHAPES = [(2, 2), (2, 4), (3, 3), (4, 4), (3, 8)]


def kernel_table(repeat):
    print(f"{'shape':>8} {'python [us]':>12} {'cython [us]':>12} {'speedup':>8}")
    for da, db in SHAPES:
        s = random_state(da, db, seed=1).matrix
        u = random_unitary(da, seed=2)
        t_py = timeit.timeit(lambda: _pykernels.measured_overlap(s, u, da, db), number=repeat) / repeat
        if _ckernels is None:
            print(f"{da}x{db:<6} {t_py * 1e6:12.2f} {'n/a':>12}")
            continue
        t_c = timeit.timeit(lambda: _ckernels.measured_overlap(s, u, da, db), number=repeat) / repeat
        print(f"{da}x{db:<6} {t_py * 1e6:12.2f} {t_c * 1e6:12.2f} {t_py / t_c:8.1f}")


def search_workload():
    cfg = SearchConfig(method="brute-force", starts=16)
    for s in range(20):
        min_affinity(bell_diagonal(random_tetrahedron_point(s)), cfg)
    min_affinity(werner(3, 0.3), cfg)


def search_table():
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    original = kernels.measured_overlap
    try:
        for name, mod in backends:
            kernels.measured_overlap = mod.measured_overlap
            t0 = time.perf_counter()
            search_workload()
            print(f"brute-force workload with {name:>6} kernel: {time.perf_counter() - t0:.2f} s")
    finally:
        kernels.measured_overlap = original


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20000)
    args = ap.parse_args()
    print(f"default backend: {kernels.BACKEND}")
    kernel_table(args.repeat)
    search_table()
    # Both kernels must agree before timings mean anything.
    s = random_state(3, 4, seed=5).matrix
    u = random_unitary(3, seed=6)
    if _ckernels is not None:
        assert np.isclose(_pykernels.measured_overlap(s, u, 3, 4), _ckernels.measured_overlap(s, u, 3, 4))


if __name__ == "__main__":
    main()
