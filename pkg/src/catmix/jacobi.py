"""Jacobi eigensolver front end: compiled kernel with pure-Python fallback.

The compiled extension is selected at import when available; set the
environment variable CATMIX_PURE_PYTHON=1 to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import NoConvergence

OFF_NORM_TOL = 1e-13
MAX_SWEEPS = 100

if os.environ.get("CATMIX_PURE_PYTHON"):
    from ._jacobi_py import jacobi_kernel

    USING_COMPILED_KERNEL = False
else:
    try:
        from ._jacobi import jacobi_kernel

        USING_COMPILED_KERNEL = True
    except ImportError:
        from ._jacobi_py import jacobi_kernel

        USING_COMPILED_KERNEL = False


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float = OFF_NORM_TOL,
    max_sweeps: int = MAX_SWEEPS,
    kernel=None,
) -> np.ndarray:
    """Full real spectrum of a Hermitian matrix, sorted descending.

    Convergence: off-diagonal Frobenius norm < tol within max_sweeps cyclic
    sweeps, else NoConvergence reporting the residual. `kernel` overrides
    the import-time choice (used by the benchmark and equivalence tests).
    """
    a = np.array(matrix, dtype=np.complex128, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square, got shape %r" % (a.shape,))
    run = kernel if kernel is not None else jacobi_kernel
    diag, sweeps, off, converged = run(a, tol, max_sweeps)
    if not converged:
        raise NoConvergence(
            "off-diagonal norm %.3e after %d sweeps (target %g)"
            % (off, sweeps, tol)
        )
    return np.sort(np.asarray(diag))[::-1]
