# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled cyclic Jacobi kernel for complex Hermitian matrices.

Hot inner loop of the brute-force verification path: two-mode density
matrices reach dimension ~600, and each rotation touches two rows and two
columns. The pure-Python twin lives in catmix._jacobi_py.
"""

import numpy as np

cimport cython
from libc.math cimport sqrt


cdef double _off_norm(double complex[:, ::1] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef double complex z
    for i in range(n):
        for j in range(n):
            if i != j:
                z = a[i, j]
                acc += z.real * z.real + z.imag * z.imag
    return sqrt(acc)


def jacobi_kernel(double complex[:, ::1] a, double tol, int max_sweeps):
    """Diagonalize a complex Hermitian matrix in place by cyclic Jacobi.

    Returns (diagonal, sweeps_used, off_norm, converged).
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef double r, tau, t, c, s, off, thresh
    cdef double complex apq, phase, phc, sphc, sph, cphc, cph, vp, vq
    cdef int sweeps = 0

    if n == 1:
        return np.array([a[0, 0].real]), 0, 0.0, True

    thresh = tol / (2.0 * n)
    with nogil:
        off = _off_norm(a, n)
    while off >= tol and sweeps < max_sweeps:
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    r = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                    if r <= thresh:
                        continue
                    phase = apq / r
                    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    phc = phase.conjugate()
                    sph = s * phase
                    sphc = s * phc
                    cph = c * phase
                    cphc = c * phc
                    # column pass: A <- A J
                    for k in range(n):
                        vp = a[k, p]
                        vq = a[k, q]
                        a[k, p] = c * vp - sphc * vq
                        a[k, q] = s * vp + cphc * vq
                    # row pass: A <- J^H A
                    for k in range(n):
                        vp = a[p, k]
                        vq = a[q, k]
                        a[p, k] = c * vp - sph * vq
                        a[q, k] = s * vp + cph * vq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    a[p, p] = a[p, p].real
                    a[q, q] = a[q, q].real
            off = _off_norm(a, n)
        sweeps += 1
    diag = np.empty(n, dtype=np.float64)
    for k in range(n):
        diag[k] = a[k, k].real
    return diag, sweeps, off, off < tol
