"""Enumeration kernels, compiled when the extension is built.

``BACKEND`` names the implementation picked at import: ``"cython"`` or
``"python"``. Both modules stay importable for cross-checks and benchmarks.
"""
from __future__ import annotations

from . import _pykernels as python_kernels

try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

_impl = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

bpa_count = _impl.bpa_count
colored_partition_counts = _impl.colored_partition_counts
MAX_BPA_N = _impl.MAX_BPA_N
MAX_PARTITION_SIZE = _impl.MAX_PARTITION_SIZE

__all__ = [
    "BACKEND",
    "bpa_count",
    "colored_partition_counts",
    "compiled_kernels",
    "python_kernels",
    "MAX_BPA_N",
    "MAX_PARTITION_SIZE",
]
