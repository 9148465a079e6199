"""Backend selection for the lattice-point kernels.

The compiled extension is used when it imports and the instance fits in
64-bit arithmetic; otherwise the pure-Python kernel runs. Setting
``POSLAB_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("POSLAB_PURE"):
        raise ImportError("pure backend forced")
    from . import _kernels as _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# |partial sums| stay below this, leaving headroom under 2**63.
_SAFE = 1 << 60


def _fits_int64(rows, rhs, lo, hi) -> bool:
    bound = max([abs(v) for v in lo] + [abs(v) for v in hi] + [1])
    for row, b in zip(rows, rhs):
        if abs(b) + sum(abs(a) for a in row) * bound * 2 >= _SAFE:
            return False
    return True


def _pick(rows, rhs, lo, hi, backend):
    if backend == "python" or _ckernels is None:
        return _pykernels
    if backend not in (None, "cython"):
        raise ValueError(f"unknown backend {backend!r}")
    return _ckernels if _fits_int64(rows, rhs, lo, hi) else _pykernels


def count_points(rows, rhs, lo, hi, backend=None) -> int:
    return int(_pick(rows, rhs, lo, hi, backend).count_points(rows, rhs, lo, hi))


def first_point(rows, rhs, lo, hi, backend=None):
    found = _pick(rows, rhs, lo, hi, backend).first_point(rows, rhs, lo, hi)
    return None if found is None else [int(v) for v in found]
