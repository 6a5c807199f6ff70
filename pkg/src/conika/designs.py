"""Concrete POVMs: full MUB sets, SICs, depolarized families, negative controls."""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DesignError, InvalidPovmError
from .linalg import DEFAULT_TOL, eigvalsh, frobenius, is_hermitian, projector

POVM_HERMITIAN_TOL = 1e-10
POVM_COMPLETENESS_TOL = 1e-9
SIC_TOL = 1e-8
MAX_MUB_PRIME = 13

SIC_FIDUCIALS = {
    # Bloch vector (1, 1, 1)/sqrt(3)
    2: np.array(
        [
            math.sqrt((1 + 1 / math.sqrt(3)) / 2),
            math.sqrt((1 - 1 / math.sqrt(3)) / 2) * np.exp(1j * math.pi / 4),
        ]
    ),
    3: np.array([0.0, 1.0, -1.0]) / math.sqrt(2),
}


@dataclass(frozen=True, eq=False)
class Povm:
    """Ordered PSD operators on C^d that sum to the identity.

    Construction validates the POVM invariants; the element stack is
    stored read-only with shape ``(m, d, d)``.
    """

    dim: int
    elements: np.ndarray
    label: str = ""

    def __post_init__(self):
        elements = np.array(self.elements, dtype=np.complex128)
        d = self.dim
        if elements.ndim != 3 or elements.shape[1:] != (d, d) or len(elements) == 0:
            raise InvalidPovmError(f"expected a stack of {d}x{d} matrices, got shape {elements.shape}")
        for alpha, e in enumerate(elements):
            if not is_hermitian(e, POVM_HERMITIAN_TOL):
                raise InvalidPovmError(f"element {alpha} is not Hermitian")
            if eigvalsh(e)[-1] < -DEFAULT_TOL:
                raise InvalidPovmError(f"element {alpha} is not positive semi-definite")
        residual = completeness_residual(elements)
        if residual > POVM_COMPLETENESS_TOL:
            raise InvalidPovmError(f"elements do not sum to the identity (||sum E - I||_F = {residual:.3e})")
        elements.setflags(write=False)
        object.__setattr__(self, "elements", elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def completeness_residual(elements):
    elements = np.asarray(elements)
    return frobenius(elements.sum(axis=0) - np.eye(elements.shape[-1]))


def is_prime(n):
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def mub_vectors(d):
    """The d+1 mutually unbiased bases for prime d, as a list of (d, d) arrays
    whose columns are the basis vectors."""
    if not is_prime(d) or d > MAX_MUB_PRIME:
        raise DesignError(f"full MUB sets are built for prime d <= {MAX_MUB_PRIME}; got d={d}")
    if d == 2:
        s = 1 / math.sqrt(2)
        return [
            np.eye(2, dtype=np.complex128),
            np.array([[s, s], [s, -s]], dtype=np.complex128),
            np.array([[s, s], [1j * s, -1j * s]], dtype=np.complex128),
        ]
    j = np.arange(d)
    bases = [np.eye(d, dtype=np.complex128)]
    for b in range(d):
        # column m: exp(2 pi i (b j^2 + m j) / d) / sqrt(d)
        phase = (b * j[:, None] ** 2 + j[:, None] * j[None, :]) % d
        bases.append(np.exp(2j * np.pi * phase / d) / math.sqrt(d))
    return bases


def mub_full_set(d):
    bases = mub_vectors(d)
    weight = 1.0 / (d + 1)
    elements = [weight * projector(basis[:, m]) for basis in bases for m in range(d)]
    return Povm(d, elements, label=f"mub:d={d}")


def weyl_heisenberg(d):
    """Displacement operators X^j Z^k, j, k = 0..d-1, in row-major (j, k) order."""
    x = np.roll(np.eye(d, dtype=np.complex128), 1, axis=0)
    z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    ops = []
    for a in range(d):
        xa = np.linalg.matrix_power(x, a)
        for b in range(d):
            ops.append(xa @ np.linalg.matrix_power(z, b))
    return ops


def equiangularity_residual(vectors):
    """Max deviation of ``|<v_i|v_j>|^2`` from ``1/(d+1)`` over distinct pairs."""
    vectors = np.asarray(vectors)
    d = vectors.shape[1]
    gram = np.abs(vectors.conj() @ vectors.T) ** 2
    off = gram[~np.eye(len(vectors), dtype=bool)]
    return float(np.max(np.abs(off - 1.0 / (d + 1))))


def sic_from_fiducial(fiducial, tol=SIC_TOL):
    """Weyl-Heisenberg orbit of ``fiducial`` as a SIC POVM.

    Raises ``DesignError`` carrying the equiangularity residual when the
    orbit is not a SIC.
    """
    psi = np.asarray(fiducial, dtype=np.complex128).ravel()
    d = psi.shape[0]
    if d < 2:
        raise DesignError("fiducial dimension must be at least 2")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-10:
        raise DesignError(f"fiducial is not normalized (norm {np.linalg.norm(psi):.12g})")
    orbit = np.array([op @ psi for op in weyl_heisenberg(d)])
    angle_res = equiangularity_residual(orbit)
    elements = np.array([projector(v) / d for v in orbit])
    sum_res = completeness_residual(elements)
    if angle_res > tol or sum_res > tol:
        raise DesignError(
            f"orbit of the fiducial is not a SIC: equiangularity residual {angle_res:.3e}, "
            f"||sum E - I||_F = {sum_res:.3e}"
        )
    return Povm(d, elements, label=f"sic:d={d}")


def sic_povm(d):
    if d not in SIC_FIDUCIALS:
        raise DesignError(
            f"no built-in SIC fiducial for d={d}; supply one through sic_from_fiducial"
        )
    return sic_from_fiducial(SIC_FIDUCIALS[d])


def depolarize(povm, t):
    """Smear each element toward the identity: ``t E + (1 - t) Tr(E) I / d``."""
    if not 0.0 < t <= 1.0:
        raise DesignError(f"smearing parameter must lie in (0, 1]; got {t}")
    d = povm.dim
    traces = np.real(np.trace(povm.elements, axis1=1, axis2=2))
    eye = np.eye(d, dtype=np.complex128)
    elements = t * povm.elements + (1.0 - t) * traces[:, None, None] * eye / d
    base = povm.label or "povm"
    return Povm(d, elements, label=f"{base}|depol:t={t:g}")


def basis_povm(d):
    """Single orthonormal basis: a POVM that is not a conical 2-design."""
    eye = np.eye(d, dtype=np.complex128)
    return Povm(d, [projector(e) for e in eye], label=f"basis:d={d}")


def catalogue(d, smearing=(0.25, 0.5, 0.75)):
    """Every conical 2-design the package builds in dimension ``d``, by label."""
    designs = {}
    if is_prime(d) and d <= MAX_MUB_PRIME:
        designs["mub"] = mub_full_set(d)
    if d in SIC_FIDUCIALS:
        designs["sic"] = sic_povm(d)
    for name, base in list(designs.items()):
        for t in smearing:
            designs[f"{name}-depol:t={t:g}"] = depolarize(base, t)
    return designs
