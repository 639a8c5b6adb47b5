"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; setting ``TWISTBIALG_PURE=1``
forces the pure-Python versions (useful for benchmarking and debugging).
"""
import os

if os.environ.get("TWISTBIALG_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # no compiler available at install time
        from . import _kernels_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("._kernels") else "python"

qsh = _impl.qsh
set_partitions = _impl.set_partitions
packed_words = _impl.packed_words
count_acyclic_orientations = _impl.count_acyclic_orientations
count_proper_colorings = _impl.count_proper_colorings
count_monotone_maps = _impl.count_monotone_maps
