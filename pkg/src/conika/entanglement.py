"""Pure bipartite states, design probabilities and the concurrence.

For a conical 2-design with constants ``(k_s, k_a)`` the squared norm of
the product-measurement probability vector depends only on the purity of
the reduced state::

    ||p||^2 = (k_s^2 + k_a^2)/2 + (k_s^2 - k_a^2)/2 * sum_r lambda_r^4

which inverts to ``C = 2 sqrt((k_s^2 - ||p||^2) / (k_s^2 - k_a^2))``.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DesignError, DimensionError
from .linalg import DEFAULT_TOL, as_matrix, eigvalsh, haar_random_unitary, random_pure_state

NORMALIZATION_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """``|Psi> = sum_ij M[i, j] |e_i> (x) |e_j>`` on C^d (x) C^d."""

    dim: int
    coefficients: np.ndarray

    def __post_init__(self):
        m = np.array(self.coefficients, dtype=np.complex128)
        if m.shape != (self.dim, self.dim):
            raise DimensionError(f"coefficient matrix must be {self.dim}x{self.dim}, got {m.shape}")
        norm2 = float(np.sum(np.abs(m) ** 2))
        if abs(norm2 - 1.0) > NORMALIZATION_TOL:
            raise DimensionError(f"state is not normalized (squared norm {norm2:.12g})")
        m.setflags(write=False)
        object.__setattr__(self, "coefficients", m)

    @classmethod
    def from_vector(cls, vector, d=None):
        vector = np.asarray(vector, dtype=np.complex128).ravel()
        if d is None:
            d = math.isqrt(vector.size)
        if d * d != vector.size:
            raise DimensionError(f"vector of length {vector.size} is not a d^2 bipartite state")
        return cls(d, vector.reshape(d, d))

    @classmethod
    def random(cls, d, seed):
        return cls.from_vector(random_pure_state(d * d, seed), d)

    @property
    def vector(self):
        return self.coefficients.ravel()

    def apply_local(self, u, v):
        """(U (x) V)|Psi>, i.e. ``M -> U M V^T``."""
        return BipartiteState(self.dim, u @ self.coefficients @ v.T)

    def reduced_density_matrix(self, subsystem=1):
        m = self.coefficients
        if subsystem == 1:
            return m @ m.conj().T
        return m.T @ m.conj()


@dataclass(frozen=True, eq=False)
class ProbabilityTable:
    values: np.ndarray
    norm: float

    @property
    def m(self):
        return self.values.shape[0]

    def to_dict(self):
        return {"m": self.m, "values": self.values.tolist(), "norm": self.norm}


def schmidt_coefficients(state):
    """Schmidt coefficients, descending, from the spectrum of ``M M^dagger``."""
    w = eigvalsh(state.reduced_density_matrix(1))
    return np.sqrt(np.clip(w, 0.0, None))


def probability_vector(povm, state):
    """``p[a, b] = <Psi| E_a (x) E_b |Psi>`` and its Euclidean norm."""
    if povm.dim != state.dim:
        raise DimensionError(f"POVM acts on C^{povm.dim} but the state lives on C^{state.dim} (x) C^{state.dim}")
    m = state.coefficients
    e = povm.elements
    # (E_a (x) E_b)|Psi> has coefficient matrix E_a M E_b^T
    p = np.real(np.einsum("ij,aik,kl,bjl->ab", m.conj(), e, m, e, optimize=True))
    return ProbabilityTable(values=p, norm=float(np.linalg.norm(p)))


def pnorm_from_schmidt(k_s, k_a, lambdas):
    """Predicted ``||p||`` of a conical design from Schmidt coefficients alone."""
    lam = np.asarray(lambdas, dtype=float)
    sq = 0.5 * (k_s**2 + k_a**2) + 0.5 * (k_s**2 - k_a**2) * float(np.sum(lam**4))
    return math.sqrt(sq)


def concurrence_oracle(state):
    """``sqrt(2 - 2 Tr rho^2)`` with rho the reduced state of either party."""
    rho = state.reduced_density_matrix(1)
    purity = float(np.real(np.vdot(rho, rho)))
    return math.sqrt(max(2.0 - 2.0 * purity, 0.0))


def design_concurrence(cert, pnorm, tol=DEFAULT_TOL):
    """Concurrence of a pure state from the design probability norm.

    Radicands in ``[-tol, 0]`` are clamped to zero (product states sit on
    the boundary ``||p|| = k_s``). Anything outside signals that the norm
    cannot come from a pure state measured with this design.
    """
    if not cert.is_conical_design:
        raise DesignError("concurrence from probabilities requires a conical 2-design certificate")
    if pnorm > cert.k_s + tol:
        raise DesignError(f"||p|| = {pnorm:.12g} exceeds k_s = {cert.k_s:.12g}")
    radicand = (cert.k_s**2 - pnorm**2) / (cert.k_s**2 - cert.k_a**2)
    if radicand < -tol:
        raise DesignError(f"negative radicand {radicand:.3e}")
    return 2.0 * math.sqrt(max(radicand, 0.0))


def local_unitary_orbit_norms(povm, state, trials, seed):
    """``||p||`` on ``(U_i (x) V_i)|Psi>`` for Haar-random ``U_i, V_i``.

    Draw ``i`` uses the seed sequences ``[seed, i, 0]`` and ``[seed, i, 1]``,
    so results do not depend on evaluation order.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    d = state.dim
    norms = np.empty(trials)
    for i in range(trials):
        u = haar_random_unitary(d, [seed, i, 0])
        v = haar_random_unitary(d, [seed, i, 1])
        norms[i] = probability_vector(povm, state.apply_local(u, v)).norm
    return norms
