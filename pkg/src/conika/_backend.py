"""Select the eigensolver kernel at import time.

The compiled ``_jacobi`` extension is used when importable; otherwise the
numpy implementation in ``_jacobi_py``. Setting ``CONIKA_PURE_PYTHON=1``
forces the fallback.
"""
import os

from . import _jacobi_py

pure_jacobi_eigh = _jacobi_py.jacobi_eigh

try:
    from ._jacobi import jacobi_eigh as compiled_jacobi_eigh
except ImportError:
    compiled_jacobi_eigh = None

if compiled_jacobi_eigh is not None and os.environ.get("CONIKA_PURE_PYTHON", "") in ("", "0"):
    jacobi_eigh = compiled_jacobi_eigh
    BACKEND = "compiled"
else:
    jacobi_eigh = pure_jacobi_eigh
    BACKEND = "python"
