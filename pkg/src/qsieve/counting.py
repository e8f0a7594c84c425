"""Point-counting kernel selection.

Prefers the compiled extension and falls back to the pure-Python twin; set
QSIEVE_PURE_PYTHON=1 to force the fallback.  Both expose the same functions
and are cross-checked in the test suite.
"""

from __future__ import annotations

import os

from . import _counting_py

if os.environ.get("QSIEVE_PURE_PYTHON"):
    _impl = _counting_py
else:
    try:
        from . import _counting as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _counting_py

IMPLEMENTATION = _impl.IMPLEMENTATION

trace_fq = _impl.trace_fq
trace_fq2 = _impl.trace_fq2
traceset_ramified = _impl.traceset_ramified
traceset_split = _impl.traceset_split
traceset_inert = _impl.traceset_inert


def least_nonresidue(q: int) -> int:
    """Smallest quadratic non-residue mod an odd prime q."""
    for n in range(2, q):
        if pow(n, (q - 1) // 2, q) == q - 1:
            return n
    raise ValueError(f"{q} has no non-residue; not an odd prime?")
