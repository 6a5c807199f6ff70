"""Pure-Python cyclic Jacobi eigensolver for complex Hermitian matrices.

Fallback for the compiled ``_jacobi`` extension; same algorithm, same
return contract. Rotations are applied with numpy row/column slices.
"""
import math

import numpy as np


def jacobi_eigh(a, rel_tol=1e-12, max_sweeps=100):
    """Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.

    Returns ``(eigenvalues, eigenvectors, sweeps, off_norm)`` with the
    eigenvalues unsorted (diagonal order) and ``off_norm`` the Frobenius
    norm of the remaining off-diagonal part. ``sweeps`` is -1 when the
    sweep cap was hit before reaching ``rel_tol * ||A||_F``.
    """
    h = np.array(a, dtype=np.complex128, copy=True)
    n = h.shape[0]
    v = np.eye(n, dtype=np.complex128)
    target = rel_tol * math.sqrt(float(np.sum(np.abs(h) ** 2)))

    off_mask = ~np.eye(n, dtype=bool)

    def off_norm():
        return math.sqrt(float(np.sum(np.abs(h[off_mask]) ** 2)))

    off = off_norm()
    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            return np.real(np.diag(h)).copy(), v, -1, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(h[p, q])
                mag = abs(apq)
                if mag == 0.0:
                    continue
                phase = apq / mag
                app = h[p, p].real
                aqq = h[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # G = [[c, s*phase], [-s*conj(phase), c]] on the (p, q) plane
                gpq = s * phase
                gqp = -s * phase.conjugate()
                col_p = h[:, p].copy()
                col_q = h[:, q]
                h[:, p] = c * col_p + gqp * col_q
                h[:, q] = gpq * col_p + c * col_q
                row_p = h[p, :].copy()
                row_q = h[q, :]
                h[p, :] = c * row_p + gqp.conjugate() * row_q
                h[q, :] = gpq.conjugate() * row_p + c * row_q
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = app - t * mag
                h[q, q] = aqq + t * mag
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp + gqp * vq
                v[:, q] = gpq * vp + c * vq
        sweeps += 1
        off = off_norm()
    return np.real(np.diag(h)).copy(), v, sweeps, off
