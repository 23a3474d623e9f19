"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is
used otherwise.  Set MEDUSA_PURE_PYTHON=1 to force the fallback.  Both
backends expose the same four functions and produce identical outputs
(covered by the backend-equivalence tests and the benchmark in
``benchmarks/bench_kernels.py``).
"""
from __future__ import annotations

import os

from . import pykernels

_compiled = None
if not os.environ.get("MEDUSA_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

_active = _compiled if _compiled is not None else pykernels

BACKEND = _active.BACKEND
core_numbers = _active.core_numbers
bfs_distances = _active.bfs_distances
component_labels = _active.component_labels
box_cover_assign = _active.box_cover_assign


def available_backends() -> dict[str, object]:
    """Importable backend modules keyed by name."""
    out: dict[str, object] = {"pure-python": pykernels}
    try:
        from . import _ckernels
        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
