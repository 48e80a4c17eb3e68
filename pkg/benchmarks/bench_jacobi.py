"""Benchmark the compiled Jacobi kernel against the pure-Python twin.

Diagonalizes random dense Hermitian matrices of increasing size with both
kernels and prints wall time plus the largest eigenvalue discrepancy.

    python3 benchmarks/bench_jacobi.py [--sizes 16,32,64,128] [--repeats 3]
"""

import argparse
import time

import numpy as np

from catmix._jacobi_py import jacobi_kernel as py_kernel
from catmix.jacobi import jacobi_eigenvalues

try:
    from catmix._jacobi import jacobi_kernel as c_kernel
except ImportError:
    c_kernel = None


def random_hermitian(n: int, rng) -> np.ndarray:
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = (m + m.conjugate().T) / 2.0
    return h / np.linalg.norm(h)


def time_kernel(kernel, matrices) -> tuple[float, list[np.ndarray]]:
    start = time.perf_counter()
    spectra = [jacobi_eigenvalues(m, kernel=kernel) for m in matrices]
    return time.perf_counter() - start, spectra


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="16,32,64,128")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(7)

    if c_kernel is None:
        print("compiled kernel unavailable; benchmarking pure Python only")
    print(f"{'n':>6} {'compiled [s]':>14} {'pure py [s]':>14} "
          f"{'speedup':>9} {'max |diff|':>12}")
    for n in sizes:
        matrices = [random_hermitian(n, rng) for _ in range(args.repeats)]
        t_py, eig_py = time_kernel(py_kernel, matrices)
        if c_kernel is None:
            print(f"{n:>6} {'-':>14} {t_py / args.repeats:>14.4f}")
            continue
        t_c, eig_c = time_kernel(c_kernel, matrices)
        diff = max(
            float(np.max(np.abs(a - b))) for a, b in zip(eig_c, eig_py)
        )
        print(f"{n:>6} {t_c / args.repeats:>14.4f} {t_py / args.repeats:>14.4f} "
              f"{t_py / t_c:>8.1f}x {diff:>12.2e}")


if __name__ == "__main__":
    main()
