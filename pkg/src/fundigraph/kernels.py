"""Backend selection for the hot kernels.

The compiled extension is used when it imports; ``FUNDIGRAPH_PURE_PYTHON=1``
forces the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("FUNDIGRAPH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
canonical_labeling = _impl.canonical_labeling
product_successors = _impl.product_successors
least_rotation = _impl.least_rotation

__all__ = ["BACKEND", "canonical_labeling", "product_successors", "least_rotation"]
