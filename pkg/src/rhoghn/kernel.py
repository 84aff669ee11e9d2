"""Backend selection for the box search used by the brute force oracle.

The compiled extension is used when it imported and the instance fits in
128 bit arithmetic; otherwise the pure Python implementation runs.  Setting
``RHOGHN_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    if os.environ.get("RHOGHN_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

BACKEND = "cython" if _kernel_c is not None else "python"

_LIMIT64 = 2**62
_LIMIT128 = 2**125


def fits_int128(weights, ranks, diffs, bound) -> bool:
    """Conservative check that no intermediate of the compiled search overflows."""
    E = len(diffs[0]) if diffs else 0
    m_max = [bound * sum(abs(x) for x in w) for w in weights]
    for seq in (ranks, [x for w in weights for x in w], [x for d in diffs for x in d]):
        if any(abs(x) >= _LIMIT64 for x in seq):
            return False
    L_max = sum(m * max((abs(x) for x in d), default=0) for m, d in zip(m_max, diffs))
    Q_max = sum(r * m * m for r, m in zip(ranks, m_max))
    return max(E, 1) * L_max * L_max * Q_max < _LIMIT128 and Q_max < _LIMIT64


def box_argmax(weights, ranks, diffs, bound, backend: str | None = None):
    """Dispatch to the requested backend, or the fastest safe one."""
    if backend == "python" or (backend is None and _kernel_c is None):
        return _kernel_py.box_argmax(weights, ranks, diffs, bound)
    if _kernel_c is None:
        raise RuntimeError("compiled kernel is not available")
    if not fits_int128(weights, ranks, diffs, bound):
        if backend == "cython":
            raise OverflowError("instance exceeds the compiled kernel's integer range")
        return _kernel_py.box_argmax(weights, ranks, diffs, bound)
    return _kernel_c.box_argmax(weights, ranks, diffs, bound)
