"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module.  Setting ``STARHESS_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from starhess import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("STARHESS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from starhess import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

enumerate_paths = _impl.enumerate_paths
bareiss_det = _impl.bareiss_det
minors_of_order = _impl.minors_of_order

__all__ = ["BACKEND", "enumerate_paths", "bareiss_det", "minors_of_order"]
