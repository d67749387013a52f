"""Backend selection for the echelon kernel.

The compiled extension is used when it was built and ``FSPECTRUM_PURE_PYTHON``
is not set; it falls back to the pure-Python kernel on 64-bit overflow.
"""

from __future__ import annotations

import os
from array import array
from typing import List, Optional, Sequence, Tuple

from . import _kernel_py

try:
    from . import _kernel_ext
except ImportError:  # extension not built
    _kernel_ext = None

_INT64 = (1 << 63) - 1

COMPILED_AVAILABLE = _kernel_ext is not None


def default_backend() -> str:
    if COMPILED_AVAILABLE and not os.environ.get("FSPECTRUM_PURE_PYTHON"):
        return "compiled"
    return "python"


def _pack(rows: Sequence[Tuple[Sequence[int], Sequence[int]]]):
    ptr = array("q", [0])
    cols = array("i")
    vals = array("q")
    for c, v in rows:
        if any(abs(x) > _INT64 for x in v):
            return None
        cols.extend(c)
        vals.extend(v)
        ptr.append(len(cols))
    return ptr, cols, vals


def echelon_pivots(rows, ncols: int, backend: Optional[str] = None) -> Tuple[List[int], str]:
    """Pivot columns plus the name of the backend that produced them."""
    backend = backend or default_backend()
    if backend == "compiled":
        if _kernel_ext is None:
            raise RuntimeError("compiled kernel is not available")
        packed = _pack(rows)
        if packed is not None:
            try:
                return _kernel_ext.echelon_pivots(*packed, ncols), "compiled"
            except OverflowError:
                pass
        return _kernel_py.echelon_pivots(rows, ncols), "python (overflow fallback)"
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _kernel_py.echelon_pivots(rows, ncols), "python"
