import numpy as np
import pytest

from conika import _backend

KERNELS = [pytest.param(_backend.pure_jacobi_eigh, id="python")]
if _backend.compiled_jacobi_eigh is not None:
    KERNELS.insert(0, pytest.param(_backend.compiled_jacobi_eigh, id="compiled"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


def random_hermitian(n, rng):
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (x + x.conj().T)


def random_matrix(n, rng):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def kron_design_sum(elements):
    """Brute-force sum of E (x) E with numpy's kron."""
    return sum(np.kron(e, e) for e in elements)


def symmetric_projector_oracle(d):
    """P_sym, P_asym assembled from explicit (anti)symmetrized basis vectors."""
    dim = d * d
    sym = np.zeros((dim, dim), dtype=complex)
    asym = np.zeros((dim, dim), dtype=complex)
    basis = np.eye(d)
    for i in range(d):
        for j in range(i, d):
            v = np.kron(basis[i], basis[j]) + np.kron(basis[j], basis[i])
            v = v / np.linalg.norm(v)
            sym += np.outer(v, v)
            if i != j:
                w = np.kron(basis[i], basis[j]) - np.kron(basis[j], basis[i])
                w = w / np.linalg.norm(w)
                asym += np.outer(w, w)
    return sym, asym


ACCEPTANCE_LINES = []


def record_acceptance(number, ok, text):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
