"""Pure-Python cyclic Jacobi kernel for complex Hermitian matrices.

Fallback used when the compiled extension is unavailable. Same contract as
catmix._jacobi: the matrix is diagonalized in place by unitary two-sided
rotations; returns (diagonal, sweeps_used, off_norm, converged).

Each rotation zeroes one off-diagonal pair (p, q). The complex pivot is
reduced to the real symmetric case by the phase factor of a[p, q], then the
classic rotation with the smaller-root tangent is applied.
"""

from __future__ import annotations

import math

import numpy as np


def _off_norm(a: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part."""
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_kernel(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic threshold Jacobi on a complex Hermitian matrix, in place."""
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real]), 0, 0.0, True
    # Skipping pivots below this still lets the off-norm reach tol.
    thresh = tol / (2.0 * n)
    off = _off_norm(a)
    sweeps = 0
    while off >= tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= thresh:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sph = s * phase
                # column pass: A <- A J
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sph.conjugate() * col_q
                a[:, q] = s * col_p + c * phase.conjugate() * col_q
                # row pass: A <- J^H A
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sph * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        sweeps += 1
        off = _off_norm(a)
    return np.diag(a).real.copy(), sweeps, off, off < tol
