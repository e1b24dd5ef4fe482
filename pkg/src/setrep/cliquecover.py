"""Edge clique covers and the correspondence with simple representations.

A cover is a list of cliques of a graph that together touch every vertex
and every edge.  When additionally no edge lies in two cliques, the cover
is an edge clique *partition*.  Reading clique membership per vertex
turns a cover into a set representation (``egp_set``); reading element
occurrence per universe member turns a simple representation back into a
cover (``egp_cover``).  On partitions these two maps are mutually inverse,
and a representation is simple exactly when its cover is a partition.

Cliques consisting of a single vertex ("trivial" cliques) are allowed:
they cover no edge but pad a vertex's set, which the distinctness and
antichain categories frequently need.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCoverError
from .graphs import Graph
from .representations import SetRepresentation, represents


@dataclass(frozen=True)
class CliqueCover:
    graph: Graph
    cliques: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        """Number of cliques = universe size of the induced representation."""
        return len(self.cliques)

    def trivial_count(self) -> int:
        return sum(1 for q in self.cliques if len(q) == 1)


def validate_cover(cover: CliqueCover) -> None:
    """Raise :class:`InvalidCoverError` unless every listed set is a clique
    and every vertex and edge of the graph is covered."""
    g = cover.graph
    seen_vertices: set[int] = set()
    covered: set[tuple[int, int]] = set()
    for idx, q in enumerate(cover.cliques):
        if not q:
            raise InvalidCoverError(f"clique #{idx} is empty")
        for v in q:
            if not 0 <= v < g.n:
                raise InvalidCoverError(
                    f"clique #{idx} names vertex {v}, out of range")
        members = sorted(q)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                u, v = members[a], members[b]
                if not g.has_edge(u, v):
                    raise InvalidCoverError(
                        f"clique #{idx} contains the non-edge "
                        f"{g.labels[u]!r}-{g.labels[v]!r}")
                covered.add((u, v))
        seen_vertices.update(members)
    if seen_vertices != set(range(g.n)):
        missing = sorted(set(range(g.n)) - seen_vertices)
        names = ", ".join(g.labels[v] for v in missing)
        raise InvalidCoverError(f"vertices not covered: {names}")
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        if key not in covered:
            raise InvalidCoverError(
                f"edge {g.labels[u]!r}-{g.labels[v]!r} not covered")


def is_partition(cover: CliqueCover) -> bool:
    """True when no edge lies in two cliques (cover assumed valid)."""
    used: set[tuple[int, int]] = set()
    for q in cover.cliques:
        members = sorted(q)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                key = (members[a], members[b])
                if key in used:
                    return False
                used.add(key)
    return True


def egp_set(cover: CliqueCover) -> SetRepresentation:
    """Representation whose universe is the clique list: vertex ``v``
    receives the indices of the cliques containing ``v``."""
    validate_cover(cover)
    sets = tuple(
        frozenset(j for j, q in enumerate(cover.cliques) if v in q)
        for v in range(cover.graph.n))
    return SetRepresentation(universe=tuple(range(cover.size)), sets=sets)


def egp_cover(rep: SetRepresentation, graph: Graph) -> CliqueCover:
    """Inverse reading: universe element ``e`` becomes the vertex group
    holding ``e``.  Requires ``rep`` to represent ``graph`` and to use
    every universe element (a stale element would silently vanish)."""
    if not represents(rep, graph):
        raise InvalidCoverError(
            "representation does not realise the graph's adjacency")
    groups = {e: frozenset(v for v in range(graph.n) if e in rep.sets[v])
              for e in rep.universe}
    for e, grp in groups.items():
        if not grp:
            raise InvalidCoverError(f"universe element {e} is in no set")
    cover = CliqueCover(graph=graph,
                        cliques=tuple(groups[e] for e in sorted(groups)))
    validate_cover(cover)
    return cover


def silly_partition(n: int) -> CliqueCover:
    """The one-big-clique partition of the complete graph on ``n``
    vertices: the whole vertex set plus a trivial clique on every vertex
    but the last (exactly enough padding to keep the sets distinct)."""
    from .graphs import complete_graph

    if n < 1:
        raise ValueError("n must be positive")
    g = complete_graph(n)
    cliques = [frozenset(range(n))]
    cliques += [frozenset({v}) for v in range(n - 1)]
    return CliqueCover(graph=g, cliques=tuple(cliques))


def cover_to_json_dict(cover: CliqueCover, *, inline_graph: bool = True) -> dict:
    from .graphs import format_graph

    data: dict = {
        "cliques": [sorted(cover.graph.labels[v] for v in q)
                    for q in cover.cliques],
    }
    if inline_graph:
        data["graph"] = format_graph(cover.graph)
    return data


def cover_from_json_dict(data: dict, graph: Graph | None = None) -> CliqueCover:
    """Load a cover; the graph may be supplied by the caller, inline as
    edge-list text under "graph" (recognised by its newline), or as a
    path string under "graph"."""
    from .graphs import parse_graph

    if graph is None:
        ref = data.get("graph")
        if ref is None:
            raise InvalidCoverError(
                "cover JSON carries no graph and none was supplied")
        if "\n" in ref:
            graph = parse_graph(ref)
        else:
            with open(ref, "r", encoding="utf-8") as fh:
                graph = parse_graph(fh.read())
    cliques = tuple(frozenset(graph.index(lab) for lab in q)
                    for q in data["cliques"])
    cover = CliqueCover(graph=graph, cliques=cliques)
    validate_cover(cover)
    return cover
