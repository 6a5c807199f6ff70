"""Entanglement witnesses built from a conical 2-design.

With ``k_plus = (k_s + k_a)/2`` and ``k_minus = (k_s - k_a)/2``::

    N    = sum_a E_a (x) E_a     = k_plus I + k_minus W_12
    N^PT = sum_a E_a (x) E_a^T   = k_plus I + d k_minus |Phi+><Phi+|

On product states ``<N>`` and ``<N^PT>`` both range over
``[k_plus, k_plus + k_minus]``; over all pure states ``N`` reaches down to
``k_plus - k_minus`` and ``N^PT`` up to ``k_plus + d k_minus``. So ``N``
detects entanglement from below only and ``N^PT`` from above only.
"""
from dataclasses import dataclass, asdict, fields
from typing import NamedTuple, Optional
import math

import numpy as np

from .certifier import design_sum
from .errors import DesignError, DimensionError
from .linalg import (
    as_matrix,
    hermitian_eigensystem,
    is_hermitian,
    max_entangled_state,
    partial_trace,
    partial_transpose,
    projector,
    random_pure_state,
    swap_operator,
    sym_asym_projectors,
)

DETECTION_MARGIN = 1e-12
SEESAW_RESTARTS = 32
SEESAW_ITERS = 200
SEESAW_STOP = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        rho = as_matrix(self.matrix).copy()
        if rho.shape != (self.dim, self.dim):
            raise DimensionError(f"density matrix must be {self.dim}x{self.dim}, got {rho.shape}")
        if not is_hermitian(rho, 1e-10):
            raise DimensionError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1.0) > 1e-10:
            raise DimensionError(f"density matrix trace is {np.trace(rho).real:.12g}, not 1")
        if hermitian_eigensystem(rho)[0][-1] < -1e-9:
            raise DimensionError("density matrix is not positive semi-definite")
        rho.setflags(write=False)
        object.__setattr__(self, "matrix", rho)


@dataclass(frozen=True)
class WitnessReport:
    s_minus_N: float
    s_plus_N: float
    e_minus_N: float
    e_plus_N: float
    s_minus_NPT: float
    s_plus_NPT: float
    e_minus_NPT: float
    e_plus_NPT: float
    numeric_s_minus_N: Optional[float] = None
    numeric_s_plus_N: Optional[float] = None
    numeric_s_minus_NPT: Optional[float] = None
    numeric_s_plus_NPT: Optional[float] = None

    def to_dict(self):
        return asdict(self)

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]


class WitnessOperators(NamedTuple):
    N: np.ndarray
    NPT: np.ndarray
    W_below: np.ndarray
    W_above: np.ndarray


class LinearDetection(NamedTuple):
    below: bool
    above: bool


def _require_design(cert):
    if not cert.is_conical_design:
        raise DesignError("witness construction requires a conical 2-design certificate")


def _density(rho):
    return rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho)


def witness_operators(cert, d):
    _require_design(cert)
    eye = np.eye(d * d, dtype=np.complex128)
    swap = swap_operator(d)
    phi = projector(max_entangled_state(d))
    kp, km = cert.k_plus, cert.k_minus
    return WitnessOperators(
        N=kp * eye + km * swap,
        NPT=kp * eye + d * km * phi,
        W_below=km * swap,
        W_above=km * (eye - d * phi),
    )


def analytic_bounds(cert, d):
    kp, km = cert.k_plus, cert.k_minus
    return WitnessReport(
        s_minus_N=kp,
        s_plus_N=kp + km,
        e_minus_N=kp - km,
        e_plus_N=kp + km,
        s_minus_NPT=kp,
        s_plus_NPT=kp + km,
        e_minus_NPT=kp,
        e_plus_NPT=kp + d * km,
    )


def extremal_pure(a):
    """Extremes of ``<Psi|A|Psi>`` over all unit vectors: the extremal eigenvalues."""
    w, _ = hermitian_eigensystem(a)
    return float(w[-1]), float(w[0])


def _seesaw_run(t, psi, phi, sign, iters):
    """Alternate extremal-eigenvector updates; ``sign=+1`` maximizes, ``-1`` minimizes."""
    pick = 0 if sign > 0 else -1
    value = float(np.real(np.einsum("i,j,ijkl,k,l->", psi.conj(), phi.conj(), t, psi, phi)))
    for _ in range(iters):
        first = np.einsum("j,ijkl,l->ik", phi.conj(), t, phi)
        w, v = hermitian_eigensystem(first)
        psi = v[:, pick]
        second = np.einsum("i,ijkl,k->jl", psi.conj(), t, psi)
        w, v = hermitian_eigensystem(second)
        phi = v[:, pick]
        new = float(w[pick])
        improved = sign * (new - value)
        value = new
        if improved < SEESAW_STOP:
            break
    return value


def seesaw_extremal_product(a, d, restarts=SEESAW_RESTARTS, iters=SEESAW_ITERS, seed=0):
    """Min and max of ``<psi (x) phi|A|psi (x) phi>`` over product states.

    Each restart starts from Haar-random ``psi, phi`` drawn from
    ``[seed, restart]`` seed sequences and alternates between the two
    factors, replacing one by the extremal eigenvector of ``A`` contracted
    with the other. The objective is monotone in every half-step.
    """
    a = as_matrix(a)
    if a.shape != (d * d, d * d):
        raise DimensionError(f"operator of shape {a.shape} does not act on C^{d} (x) C^{d}")
    if not is_hermitian(a):
        raise DimensionError("see-saw needs a Hermitian operator")
    t = a.reshape(d, d, d, d)
    lo, hi = math.inf, -math.inf
    for r in range(restarts):
        psi = random_pure_state(d, [seed, r, 0])
        phi = random_pure_state(d, [seed, r, 1])
        hi = max(hi, _seesaw_run(t, psi, phi, +1, iters))
        lo = min(lo, _seesaw_run(t, psi, phi, -1, iters))
    return lo, hi


def witness_report(cert, d, povm=None, restarts=SEESAW_RESTARTS, iters=SEESAW_ITERS, seed=0):
    """Analytic bounds plus see-saw estimates of the product-state extremes.

    When ``povm`` is given the see-saw runs on ``sum E (x) E`` and its
    partial transpose built from the elements, not on the closed forms.
    """
    analytic = analytic_bounds(cert, d)
    if povm is not None:
        n_op = design_sum(povm)
        pt_op = partial_transpose(n_op, d)
    else:
        _require_design(cert)
        ops = witness_operators(cert, d)
        n_op, pt_op = ops.N, ops.NPT
    n_lo, n_hi = seesaw_extremal_product(n_op, d, restarts, iters, seed)
    pt_lo, pt_hi = seesaw_extremal_product(pt_op, d, restarts, iters, seed)
    return WitnessReport(
        **{k: v for k, v in analytic.to_dict().items() if not k.startswith("numeric_")},
        numeric_s_minus_N=n_lo,
        numeric_s_plus_N=n_hi,
        numeric_s_minus_NPT=pt_lo,
        numeric_s_plus_NPT=pt_hi,
    )


def _check_bipartite(rho, d):
    if rho.shape != (d * d, d * d):
        raise DimensionError(f"state of shape {rho.shape} does not live on C^{d} (x) C^{d}")


def detect_linear(rho, cert, d, margin=DETECTION_MARGIN):
    """``below``: Tr(rho N) < s_N^-; ``above``: Tr(rho N^PT) > s_NPT^+.

    Both comparisons must clear ``margin`` so that separable states sitting
    exactly on a bound are never flagged through round-off.
    """
    rho = _density(rho)
    _check_bipartite(rho, d)
    ops = witness_operators(cert, d)
    bounds = analytic_bounds(cert, d)
    tr_n = float(np.real(np.vdot(ops.N, rho)))
    tr_pt = float(np.real(np.vdot(ops.NPT, rho)))
    return LinearDetection(
        below=tr_n < bounds.s_minus_N - margin,
        above=tr_pt > bounds.s_plus_NPT + margin,
    )


def quadratic_terms(rho, cert, d):
    """``(lhs, bound)`` of the quadratic criterion.

    ``lhs = max(|Tr N (rho - rho1 (x) rho2)|, |Tr N^PT (rho - rho1 (x) rho2)|)``
    and ``bound = k_minus sqrt((1 - Tr rho1^2)(1 - Tr rho2^2))``; separable
    states satisfy ``lhs <= bound``.
    """
    rho = _density(rho)
    _check_bipartite(rho, d)
    ops = witness_operators(cert, d)
    rho1 = partial_trace(rho, d, 2)
    rho2 = partial_trace(rho, d, 1)
    delta = rho - np.kron(rho1, rho2)
    lhs = max(abs(np.vdot(ops.N, delta).real), abs(np.vdot(ops.NPT, delta).real))
    mixed1 = max(1.0 - float(np.real(np.vdot(rho1, rho1))), 0.0)
    mixed2 = max(1.0 - float(np.real(np.vdot(rho2, rho2))), 0.0)
    return float(lhs), cert.k_minus * math.sqrt(mixed1 * mixed2)


def detect_quadratic(rho, cert, d, margin=DETECTION_MARGIN):
    lhs, bound = quadratic_terms(rho, cert, d)
    return lhs > bound + margin


def werner_state(d, p):
    """Werner state ``2(1-p)/(d(d+1)) P_sym + 2p/(d(d-1)) P_asym``; entangled iff p > 1/2."""
    if d < 2:
        raise DimensionError("Werner states need d >= 2")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner parameter must lie in [0, 1]; got {p}")
    p_sym, p_asym = sym_asym_projectors(d)
    rho = 2 * (1 - p) / (d * (d + 1)) * p_sym + 2 * p / (d * (d - 1)) * p_asym
    return DensityMatrix(d * d, rho)


def random_density_matrix(d, seed, n_pure=3):
    """Mixture of ``n_pure`` Haar-random pure states on C^d (x) C^d with
    Dirichlet-uniform weights."""
    rng = np.random.default_rng([seed, 0])
    weights = rng.dirichlet(np.ones(n_pure))
    rho = sum(w * projector(random_pure_state(d * d, [seed, 1, k])) for k, w in enumerate(weights))
    return DensityMatrix(d * d, rho)


def werner_scan(cert, d, step=0.01):
    """Linear-below and quadratic detection along a p-grid of Werner states."""
    n_steps = int(round(1.0 / step))
    ops = witness_operators(cert, d)
    rows = []
    for k in range(n_steps + 1):
        p = round(k * step, 12)
        rho = werner_state(d, min(p, 1.0))
        lin = detect_linear(rho, cert, d)
        lhs, bound = quadratic_terms(rho, cert, d)
        rows.append(
            {
                "p": p,
                "tr_rho_N": float(np.real(np.vdot(ops.N, rho.matrix))),
                "below": lin.below,
                "quadratic_lhs": lhs,
                "quadratic_bound": bound,
                "detected": lhs > bound + DETECTION_MARGIN,
            }
        )
    return rows
