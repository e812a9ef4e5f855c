"""Backend selection for the permutation kernels.

The compiled module is used when it was built; setting
``GRADED_HECKE_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _kernels_py

if os.environ.get("GRADED_HECKE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = _impl.BACKEND
CapExceeded = _kernels_py.CapExceeded
encode = _kernels_py.encode
lookup = _kernels_py.lookup
closure = _impl.closure
conjugacy_labels = _impl.conjugacy_labels
centralizer_mask = _impl.centralizer_mask

__all__ = [
    "BACKEND",
    "CapExceeded",
    "centralizer_mask",
    "closure",
    "conjugacy_labels",
    "encode",
    "lookup",
]
