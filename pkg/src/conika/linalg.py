"""Dense complex linear algebra on H (x) H.

Matrices are plain ``numpy`` complex arrays. Bipartite operators are
``d**2 x d**2`` in the product basis ``|i>|j> -> i*d + j``.
"""
import math

import numpy as np

from . import _backend
from .errors import ConvergenceError, DimensionError, NotHermitianError

DEFAULT_TOL = 1e-9
HERMITIAN_TOL = 1e-10


def as_matrix(a):
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def dagger(a):
    return np.conj(np.swapaxes(a, -1, -2))


def frobenius(a):
    return float(np.linalg.norm(a))


def is_hermitian(a, tol=HERMITIAN_TOL):
    """True when ``||A - A^dagger||_F <= tol * max(1, ||A||_F)``."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return frobenius(a - dagger(a)) <= tol * max(1.0, frobenius(a))


def is_unitary(a, tol=HERMITIAN_TOL):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return frobenius(a @ dagger(a) - np.eye(a.shape[0])) <= tol * math.sqrt(a.shape[0])


def is_psd(a, tol=DEFAULT_TOL):
    """Hermitian and smallest eigenvalue >= -tol."""
    if not is_hermitian(a):
        return False
    return eigvalsh(a)[-1] >= -tol


def tensor_product(a, b):
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def _bipartite_dim(a, d):
    a = as_matrix(a)
    if d < 1 or a.shape != (d * d, d * d):
        raise DimensionError(f"operator of shape {a.shape} is not {d * d}x{d * d} for d={d}")
    return a


def partial_transpose(a, d):
    """Transpose on the second factor, computational basis."""
    a = _bipartite_dim(a, d)
    t = a.reshape(d, d, d, d)
    return np.ascontiguousarray(t.transpose(0, 3, 2, 1).reshape(d * d, d * d))


def partial_trace(a, d, subsystem):
    """Trace out ``subsystem`` (1 or 2) of a ``d**2 x d**2`` operator."""
    a = _bipartite_dim(a, d)
    t = a.reshape(d, d, d, d)
    if subsystem == 1:
        return np.einsum("ijil->jl", t)
    if subsystem == 2:
        return np.einsum("ijkj->ik", t)
    raise DimensionError(f"subsystem must be 1 or 2, got {subsystem!r}")


def hermitian_eigensystem(a, tol=HERMITIAN_TOL, max_sweeps=100, rel_target=1e-12):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues descending and
    eigenvectors as orthonormal columns. Raises ``NotHermitianError`` on
    non-Hermitian input and ``ConvergenceError`` when ``max_sweeps`` sweeps
    do not bring the off-diagonal Frobenius norm below
    ``rel_target * ||A||_F``.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"eigensystem needs a square matrix, got {a.shape}")
    if not is_hermitian(a, tol):
        raise NotHermitianError(
            f"matrix is not Hermitian: ||A - A^dagger||_F = {frobenius(a - dagger(a)):.3e}"
        )
    herm = 0.5 * (a + dagger(a))
    w, v, sweeps, off = _backend.jacobi_eigh(herm, rel_target, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps", off)
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def eigvalsh(a):
    return hermitian_eigensystem(a)[0]


def sym_asym_projectors(d):
    w = swap_operator(d)
    eye = np.eye(d * d, dtype=np.complex128)
    return 0.5 * (eye + w), 0.5 * (eye - w)


def swap_operator(d):
    """W_12 with ``W (x (x) y) = y (x) x``."""
    w = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            w[j * d + i, i * d + j] = 1.0
    return w


def max_entangled_state(d):
    phi = np.zeros(d * d, dtype=np.complex128)
    phi[:: d + 1] = 1.0 / math.sqrt(d)
    return phi


def projector(v):
    v = np.asarray(v, dtype=np.complex128)
    return np.outer(v, np.conj(v))


def haar_random_unitary(d, seed):
    """Haar-distributed unitary: QR of a complex Ginibre matrix with phase fix.

    ``seed`` may be an int or a sequence of ints (``[seed, index]``) so that
    per-trial draws are independent of evaluation order.
    """
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_pure_state(dim, seed):
    """Uniform (Haar) random unit vector from normalized complex Gaussians."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)
