"""Pure-Python edge-clique-partition enumeration kernel.

The compiled twin in ``_partition_c.pyx`` implements exactly this
algorithm with the same output order; one of the two is picked at import
time by :mod:`setrep.partitions`.  Any behavioural change here must be
mirrored there.

Graphs are bitmask-encoded: ``adj[v]`` holds the neighbours of ``v``.
A partition is returned as a sorted tuple of clique bitmasks covering
every edge exactly once, using at most ``max_cliques`` cliques of size
two or more (single-vertex cliques are the driver's business, not the
kernel's).

Search strategy: take the least uncovered edge (u, v), u minimal then v
minimal; every clique of the partition containing that edge must consist
of u, v and a clique of their common uncovered neighbourhood, so branch
on those.  Before branching, a covering bound prunes hopeless states:
a vertex with d uncovered edges needs at least ceil(d / (w - 1)) more
cliques, where w is the clique number of the uncovered graph; w is
computed by a small branch-and-bound that exits early once it can rule
pruning out.
"""

from __future__ import annotations

import time


def enumerate_edge_partitions(n, adj, max_cliques, node_limit=None,
                              deadline=None, root_stride=1, root_offset=0):
    """Enumerate partitions; returns (partitions, nodes, complete).

    ``deadline`` is an absolute ``time.monotonic()`` stamp.  With
    ``root_stride > 1`` only the top-level branches whose index is
    ``root_offset`` modulo the stride are explored (the parallel driver
    merges the slices).
    """
    unc = [adj[v] for v in range(n)]
    cliques: list[int] = []
    partitions: list[tuple[int, ...]] = []
    nodes = 0
    aborted = False

    def omega_reaches(limit: int, active: int) -> int:
        """Exact clique number of the uncovered graph, except that any
        value >= limit is reported as ``limit`` (early exit)."""
        best = 0

        def bk(size: int, cand: int) -> bool:
            nonlocal best
            if size > best:
                best = size
                if best >= limit:
                    return True
            while cand:
                if size + cand.bit_count() <= best:
                    return False
                w = cand & -cand
                cand ^= w
                if bk(size + 1, cand & unc[w.bit_length() - 1]):
                    return True
            return False

        bk(0, active)
        return best

    def descend(depth: int) -> None:
        nonlocal nodes, aborted
        if aborted:
            return
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            aborted = True
            return
        if deadline is not None and nodes % 1024 == 0 \
                and time.monotonic() > deadline:
            aborted = True
            return

        u = -1
        dmax = 0
        active = 0
        total = 0
        for x in range(n):
            ux = unc[x]
            if ux:
                if u < 0:
                    u = x
                active |= 1 << x
                d = ux.bit_count()
                total += d
                if d > dmax:
                    dmax = d
        if u < 0:
            partitions.append(tuple(sorted(cliques)))
            return
        remaining = max_cliques - len(cliques)
        if remaining <= 0:
            return
        # covering bound on the busiest vertex
        target = -(-dmax // remaining) + 1  # ceil(dmax / remaining) + 1
        w = omega_reaches(target, active)
        if w < target:
            if -(-dmax // (w - 1)) > remaining:
                return
            if total // 2 > remaining * (w * (w - 1) // 2):
                return

        v = (unc[u] & -unc[u]).bit_length() - 1
        base = (1 << u) | (1 << v)
        common = unc[u] & unc[v]

        candidates: list[int] = []

        def extend(cur: int, cand: int) -> None:
            candidates.append(cur)
            while cand:
                wbit = cand & -cand
                cand ^= wbit
                extend(cur | wbit, cand & unc[wbit.bit_length() - 1])

        extend(base, common)

        for idx, cl in enumerate(candidates):
            if depth == 0 and idx % root_stride != root_offset:
                continue
            saved = []
            rest = cl
            while rest:
                bit = rest & -rest
                rest ^= bit
                a = bit.bit_length() - 1
                saved.append((a, unc[a]))
                unc[a] &= ~cl
            cliques.append(cl)
            descend(depth + 1)
            cliques.pop()
            for a, old in saved:
                unc[a] = old
            if aborted:
                return

    descend(0)
    return partitions, nodes, not aborted
