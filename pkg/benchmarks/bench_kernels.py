"""Compare the compiled and pure-Python lattice-point kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case builds a hive polytope, computes its integer bounding box once,
and then times only the kernel call on each backend.
"""

import argparse
import time

from poslab import kernels
from poslab.hive import HiveBoundary, hive_polytope
from poslab.polyhedra import _kernel_system, coordinate_bounds, dilate

CASES = [
    ("(2,1),(2,1),(3,2,1) x200", ((2, 1), (2, 1), (3, 2, 1)), 200),
    ("(3,2,1),(3,2,1),(4,3,2,2,1) x30", ((3, 2, 1), (3, 2, 1), (4, 3, 2, 2, 1)), 30),
    ("(4,3,2,1),(4,3,2,1),(6,5,4,3,2) x6", ((4, 3, 2, 1), (4, 3, 2, 1), (6, 5, 4, 3, 2)), 6),
    ("(4,3,2,1),(4,3,2,1),(6,5,4,3,2) x12", ((4, 3, 2, 1), (4, 3, 2, 1), (6, 5, 4, 3, 2)), 12),
]

def prepare(triple, k):
    P = dilate(hive_polytope(HiveBoundary.of(*triple)), k)
    bounds = coordinate_bounds(P)
    rows, rhs = _kernel_system(P)
    return rows, rhs, [l for l, _ in bounds], [h for _, h in bounds]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel unavailable; only the Python backend will run")
    print(f"{'case':40} {'dim':>4} {'points':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, triple, k in CASES:
        rows, rhs, lo, hi = prepare(triple, k)
        t_py, n_py = best_of(lambda: kernels.count_points(rows, rhs, lo, hi, backend="python"),
                             args.repeat)
        if kernels.BACKEND == "cython":
            t_c, n_c = best_of(lambda: kernels.count_points(rows, rhs, lo, hi, backend="cython"),
                               args.repeat)
            assert n_c == n_py, (name, n_c, n_py)
            extra = f"{t_c:10.4f} {t_py / t_c:7.1f}x"
        else:
            extra = f"{'-':>10} {'-':>8}"
        print(f"{name:40} {len(lo):4d} {n_py:10d} {t_py:10.4f} {extra}")


if __name__ == "__main__":
    main()
