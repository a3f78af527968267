"""Small-field kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports; set ``CHAR2SL_PURE_PYTHON=1``
to force the fallback.  ``BACKEND`` names the active one.
"""
from __future__ import annotations

import os

from . import _pykernel as pure

compiled = None
if os.environ.get("CHAR2SL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as compiled  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        compiled = None

active = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

KIND_GL = pure.KIND_GL
KIND_SL = pure.KIND_SL
KIND_SYM = pure.KIND_SYM

det = active.det
matmul = active.matmul
transpose = active.transpose
inverse = active.inverse
enumerate_matrices = active.enumerate_matrices
conj_images = active.conj_images
congruence_images = active.congruence_images
commuting = active.commuting
preserving = active.preserving
square_scalar = active.square_scalar

__all__ = [
    "BACKEND",
    "KIND_GL",
    "KIND_SL",
    "KIND_SYM",
    "active",
    "commuting",
    "compiled",
    "conj_images",
    "congruence_images",
    "det",
    "enumerate_matrices",
    "inverse",
    "matmul",
    "preserving",
    "pure",
    "square_scalar",
    "transpose",
]
