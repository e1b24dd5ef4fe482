"""Kernel selection for the partition search.

Prefers the compiled extension and falls back to the pure-Python twin when
the extension is missing, when ``SETREP_PURE`` is set in the environment,
or when a graph is too large for the extension's 64-bit masks.  Both
kernels implement the same algorithm and produce identical output.
"""

from __future__ import annotations

import os

from ._partition_py import enumerate_edge_partitions as _pure

_COMPILED = None
if not os.environ.get("SETREP_PURE"):
    try:
        from ._partition_c import enumerate_edge_partitions as _COMPILED
    except ImportError:
        _COMPILED = None


def enumerate_edge_partitions(n, adj, max_cliques, node_limit=None,
                              deadline=None, root_stride=1, root_offset=0):
    kernel = _COMPILED if (_COMPILED is not None and n <= 64) else _pure
    return kernel(n, adj, max_cliques, node_limit=node_limit,
                  deadline=deadline, root_stride=root_stride,
                  root_offset=root_offset)


def kernel_name() -> str:
    """Which kernel ordinary (≤ 64 vertex) graphs will get."""
    return "compiled" if _COMPILED is not None else "pure"


__all__ = ["enumerate_edge_partitions", "kernel_name"]
