# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: cyclic Jacobi eigensolver for small complex
Hermitian matrices, a rotated-Hermitian-part eigenvalue scan, and the
divided-difference recurrence for triangular matrix functions.

Mirrors the contracts of ``_pyfallback``; the Jacobi solver is accurate
to machine precision at the n <= 16 sizes this package targets.
"""

import numpy as np

from libc.math cimport hypot, sqrt

ctypedef double complex zdouble

name = "compiled"

cdef int MAX_SWEEPS = 60


cdef double _frob(zdouble[:, ::1] a, int n):
    cdef double s = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            s += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
    return sqrt(s)


cdef double _off_norm(zdouble[:, ::1] a, int n):
    cdef double s = 0.0
    cdef int i, j
    for i in range(n):
        for j in range(i + 1, n):
            s += 2.0 * (a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag)
    return sqrt(s)


cdef int _jacobi(zdouble[:, ::1] a, zdouble[:, ::1] v, int n, bint with_v) except -1:
    """Diagonalize a Hermitian matrix in place; accumulate V when asked.

    On exit the diagonal of ``a`` holds the (unsorted) eigenvalues and,
    when ``with_v``, the input equals V diag(a) V*.
    """
    cdef int sweep, p, q, k
    cdef double scale, stop, skip, m, app, aqq, tau, tt, c, s
    cdef zdouble apq, phase, phc, akp, akq

    if n <= 1:
        return 0
    scale = _frob(a, n)
    if scale == 0.0:
        return 0
    stop = 1e-15 * scale
    skip = 1e-18 * scale
    for sweep in range(MAX_SWEEPS):
        if _off_norm(a, n) <= stop:
            return 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = hypot(apq.real, apq.imag)
                if m <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    tt = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    tt = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + tt * tt)
                s = tt * c
                phase = apq / m
                phc = phase.conjugate()
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * phc * akq
                    a[k, q] = s * phase * akp + c * akq
                    a[p, k] = a[k, p].conjugate()
                    a[q, k] = a[k, q].conjugate()
                a[p, p] = app - tt * m
                a[q, q] = aqq + tt * m
                a[p, q] = 0.0
                a[q, p] = 0.0
                if with_v:
                    for k in range(n):
                        akp = v[k, p]
                        akq = v[k, q]
                        v[k, p] = c * akp - s * phc * akq
                        v[k, q] = s * phase * akp + c * akq
    if _off_norm(a, n) > stop:
        raise RuntimeError("Jacobi eigensolver did not converge")
    return 0


def eigh_values(zdouble[:, ::1] h):
    """Ascending eigenvalues of a Hermitian matrix."""
    cdef int n = h.shape[0]
    work_arr = np.array(h, dtype=np.complex128, order="C")
    cdef zdouble[:, ::1] work = work_arr
    _jacobi(work, work, n, False)
    vals = np.diagonal(work_arr).real.copy()
    vals.sort()
    return vals


def eigh_factor(zdouble[:, ::1] h):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""
    cdef int n = h.shape[0]
    work_arr = np.array(h, dtype=np.complex128, order="C")
    vec_arr = np.eye(n, dtype=np.complex128)
    cdef zdouble[:, ::1] work = work_arr
    cdef zdouble[:, ::1] vecs = vec_arr
    _jacobi(work, vecs, n, True)
    vals = np.diagonal(work_arr).real.copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], vec_arr[:, order]


def rotated_max_eig(zdouble[:, ::1] a, zdouble[::1] phases):
    """Largest eigenvalue of the Hermitian part of ``phase * a`` per phase."""
    cdef int n = a.shape[0]
    cdef int m = phases.shape[0]
    out_arr = np.empty(m, dtype=np.float64)
    work_arr = np.empty((n, n), dtype=np.complex128)
    cdef double[::1] out = out_arr
    cdef zdouble[:, ::1] work = work_arr
    cdef zdouble e, z
    cdef double best
    cdef int idx, i, j
    for idx in range(m):
        e = phases[idx]
        for i in range(n):
            for j in range(n):
                z = e * a[i, j]
                work[i, j] = 0.5 * (z + (e * a[j, i]).conjugate())
        _jacobi(work, work, n, False)
        best = work[0, 0].real
        for i in range(1, n):
            if work[i, i].real > best:
                best = work[i, i].real
        out[idx] = best
    return out_arr


def parlett_recurrence(zdouble[:, ::1] t, zdouble[::1] fdiag):
    """Upper-triangular f(T) from T and f on its diagonal."""
    cdef int n = t.shape[0]
    f_arr = np.zeros((n, n), dtype=np.complex128)
    cdef zdouble[:, ::1] f = f_arr
    cdef int offset, i, j, k
    cdef zdouble num
    for i in range(n):
        f[i, i] = fdiag[i]
    for offset in range(1, n):
        for i in range(n - offset):
            j = i + offset
            num = t[i, j] * (f[i, i] - f[j, j])
            for k in range(i + 1, j):
                num += f[i, k] * t[k, j] - t[i, k] * f[k, j]
            f[i, j] = num / (t[i, i] - t[j, j])
    return f_arr
