"""Hot loops over ideal collections.

Two interchangeable backends: ``numba`` (default when importable) and a
pure-numpy path.  Pick one with ``IDCLASS_BACKEND=numba|numpy`` before import.
"""

import os

from idclass.kernels import _numpy

BACKEND = os.environ.get("IDCLASS_BACKEND", "numba").strip().lower()

if BACKEND == "numba":
    try:
        from idclass.kernels import _numba as _impl
    except ImportError:  # pragma: no cover - numba is a declared dependency
        BACKEND, _impl = "numpy", _numpy
elif BACKEND == "numpy":
    _impl = _numpy
else:
    raise ImportError(f"IDCLASS_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")

sum_table = _impl.sum_table
inclusion_matrix = _impl.inclusion_matrix
preceq_matrix = _impl.preceq_matrix
sum_flags = _impl.sum_flags
prime_flags = _impl.prime_flags
longest_chain = _impl.longest_chain
covers = _impl.covers

__all__ = [
    "BACKEND", "sum_table", "inclusion_matrix", "preceq_matrix", "sum_flags",
    "prime_flags", "longest_chain", "covers",
]
