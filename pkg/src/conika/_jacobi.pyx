# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for complex Hermitian matrices."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()


cdef inline double abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef double off_diagonal_norm(double complex[:, ::1] h) nogil:
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += abs2(h[i, j])
    return sqrt(acc)


def jacobi_eigh(a, double rel_tol=1e-12, int max_sweeps=100):
    """Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.

    Same contract as the pure-Python fallback: returns
    ``(eigenvalues, eigenvectors, sweeps, off_norm)``, ``sweeps == -1``
    on hitting the sweep cap.
    """
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] h_arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = h_arr.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] v_arr = np.eye(n, dtype=np.complex128)
    cdef double complex[:, ::1] h = h_arr
    cdef double complex[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, k
    cdef double mag, app, aqq, theta, t, c, s, total
    cdef double complex phase, gpq, gqp, xp, xq
    cdef int sweeps = 0
    cdef double off, target

    total = 0.0
    for p in range(n):
        for q in range(n):
            total += abs2(h[p, q])
    target = rel_tol * sqrt(total)

    with nogil:
        off = off_diagonal_norm(h)
        while off > target:
            if sweeps >= max_sweeps:
                sweeps = -1
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    mag = sqrt(abs2(h[p, q]))
                    if mag == 0.0:
                        continue
                    phase = h[p, q] / mag
                    app = h[p, p].real
                    aqq = h[q, q].real
                    theta = (aqq - app) / (2.0 * mag)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    gpq = s * phase
                    gqp = -s * phase.conjugate()
                    for k in range(n):
                        xp = h[k, p]
                        xq = h[k, q]
                        h[k, p] = c * xp + gqp * xq
                        h[k, q] = gpq * xp + c * xq
                    for k in range(n):
                        xp = h[p, k]
                        xq = h[q, k]
                        h[p, k] = c * xp + gqp.conjugate() * xq
                        h[q, k] = gpq.conjugate() * xp + c * xq
                    h[p, q] = 0.0
                    h[q, p] = 0.0
                    h[p, p] = app - t * mag
                    h[q, q] = aqq + t * mag
                    for k in range(n):
                        xp = v[k, p]
                        xq = v[k, q]
                        v[k, p] = c * xp + gqp * xq
                        v[k, q] = gpq * xp + c * xq
            sweeps += 1
            off = off_diagonal_norm(h)

    return np.real(np.diag(h_arr)).copy(), v_arr, sweeps, off
