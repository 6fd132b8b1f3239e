"""Backend selection for the bitmask kernels.

The compiled ``_ckernels`` module is used when it imported cleanly and the
graph has at most 64 vertices; everything else runs on ``_pykernels``.
Setting ``KFCRIT_PURE_PYTHON=1`` before import forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("KFCRIT_PURE_PYTHON", "") not in ("", "0"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_C_LIMITS = {"brute_matching_size": 24, "edge_connectivity": 30}

__all__ = [
    "BACKEND",
    "all_edges_have_witness",
    "brute_matching_size",
    "components",
    "edge_connectivity",
    "find_claw",
    "find_witness",
    "has_perfect_matching",
    "is_connected",
    "kfc_failure",
    "matching_size",
    "max_matching",
    "non_minimal_edge",
    "odd_component_count",
    "tutte_barrier",
    "vertex_connectivity",
]


def _dispatch(name: str):
    py = getattr(_pykernels, name)
    if _ckernels is None:
        return py
    c = getattr(_ckernels, name)
    limit = _C_LIMITS.get(name, 64)

    def call(adj, *args):
        if len(adj) <= limit:
            return c(adj, *args)
        return py(adj, *args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


for _name in __all__[1:]:
    globals()[_name] = _dispatch(_name)
del _name


def backends():
    """Available kernel modules keyed by name (for equivalence tests and
    benchmarks)."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out
