"""Decide whether a POVM is a conical 2-design and extract (k_s, k_a).

A conical 2-design satisfies
``sum_a E_a (x) E_a = k_s P_sym + k_a P_asym`` with ``k_s > k_a >= 0``.

Two conventions for the derived constants are in circulation. The stored
fields ``k_plus``/``k_minus`` are the halved ones,
``k_plus = (k_s + k_a) / 2`` and ``k_minus = (k_s - k_a) / 2``, so that
``N = k_plus I + k_minus W_12``. The unhalved sums ``k_s +/- k_a`` are
available as ``k_sum``/``k_diff``.
"""
from dataclasses import dataclass, asdict

import numpy as np

from .designs import completeness_residual
from .linalg import DEFAULT_TOL, eigvalsh, frobenius, sym_asym_projectors


@dataclass(frozen=True)
class DesignCertificate:
    k_s: float
    k_a: float
    k_plus: float
    k_minus: float
    design_residual: float
    povm_residual: float
    is_conical_design: bool
    is_projective_design: bool

    @property
    def k_sum(self):
        return self.k_s + self.k_a

    @property
    def k_diff(self):
        return self.k_s - self.k_a

    def to_dict(self):
        return asdict(self)


def design_sum(povm):
    """N = sum_a E_a (x) E_a as a d^2 x d^2 matrix."""
    e = povm.elements
    d = povm.dim
    return np.einsum("aij,akl->ikjl", e, e).reshape(d * d, d * d)


def certify(povm, tol=DEFAULT_TOL):
    d = povm.dim
    n = design_sum(povm)
    p_sym, p_asym = sym_asym_projectors(d)
    k_s = 2.0 * float(np.real(np.vdot(p_sym, n))) / (d * (d + 1))
    k_a = 2.0 * float(np.real(np.vdot(p_asym, n))) / (d * (d - 1))
    design_residual = frobenius(n - k_s * p_sym - k_a * p_asym)
    povm_residual = completeness_residual(povm.elements)
    conical = design_residual <= tol and k_s - k_a > tol and k_a >= -tol
    return DesignCertificate(
        k_s=k_s,
        k_a=k_a,
        design_residual=design_residual,
        povm_residual=povm_residual,
        is_conical_design=bool(conical),
        is_projective_design=bool(conical and abs(k_a) <= tol),
        k_plus=0.5 * (k_s + k_a),
        k_minus=0.5 * (k_s - k_a),
    )


def rank_profile(povm, tol=DEFAULT_TOL):
    """Numerical rank of each element: eigenvalues above ``tol * ||E||_2``."""
    ranks = []
    for e in povm.elements:
        w = eigvalsh(e)
        scale = max(abs(w[0]), abs(w[-1]))
        ranks.append(int(np.sum(w > tol * scale)) if scale > 0 else 0)
    return ranks
