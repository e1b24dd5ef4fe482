"""Small named graphs shared across the test modules.

Everything here is a base graph; tests that need the line graph build it
themselves.  Labels are strings so that the text format round-trips
without surprises.
"""

from setrep import Graph, complete_graph, cycle_graph, path_graph, star_graph


def from_edges(edges):
    """Build a Graph from (label, label) pairs, labels sorted."""
    labels = sorted({v for e in edges for v in e})
    index = {lab: i for i, lab in enumerate(labels)}
    pairs = sorted(
        (min(index[a], index[b]), max(index[a], index[b])) for a, b in edges
    )
    return Graph(tuple(labels), tuple(pairs))


def plumed_triangle(m):
    """Triangle with m pendant edges on one corner (kind TP1)."""
    edges = [("v", "x"), ("v", "y"), ("x", "y")]
    edges += [("v", f"p{i}") for i in range(m)]
    return from_edges(edges)


def two_plumed_triangle(m1, m2):
    """Triangle with pendants on two corners (kind TP2)."""
    edges = [("v1", "v2"), ("v1", "a"), ("v2", "a")]
    edges += [("v1", f"p{i}") for i in range(m1)]
    edges += [("v2", f"q{i}") for i in range(m2)]
    return from_edges(edges)


def book(t):
    """t triangles glued along a common edge uv (kind W_t)."""
    edges = [("u", "v")]
    for i in range(t):
        edges += [("u", f"f{i}"), ("v", f"f{i}")]
    return from_edges(edges)


def plumed_book(t, m1, m2=0):
    """Book with pendants on one or both spine vertices (TPd1 / TPd2)."""
    edges = [("u", "v")]
    for i in range(t):
        edges += [("u", f"f{i}"), ("v", f"f{i}")]
    edges += [("u", f"p{i}") for i in range(m1)]
    edges += [("v", f"q{i}") for i in range(m2)]
    return from_edges(edges)


def friendship3():
    """Three disjoint edges joined to a hub: 3K2 + K1."""
    edges = [("a1", "a2"), ("b1", "b2"), ("c1", "c2")]
    edges += [("z", w) for w in ("a1", "a2", "b1", "b2", "c1", "c2")]
    return from_edges(edges)


def bridged_triangles():
    """Two triangles joined by a bridge; both bridge ends are 3-wing stalks."""
    return from_edges(
        [
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("d", "e"),
            ("d", "f"),
            ("e", "f"),
            ("c", "d"),
        ]
    )


def dumbbell():
    """An edge whose both ends carry two pendants each."""
    return from_edges(
        [("v1", "v2"), ("v1", "p1"), ("v1", "p2"), ("v2", "q1"), ("v2", "q2")]
    )


def wing_path():
    """Triangle with a path of length two hanging off one corner."""
    return from_edges([("v", "x"), ("v", "y"), ("x", "y"), ("v", "a"), ("a", "b")])


def trimmed_fig5():
    """K4 with one extra pendant: the smallest graph whose triangle block
    is no wing at all."""
    return from_edges(
        [
            ("b", "c"),
            ("b", "h"),
            ("b", "i"),
            ("c", "h"),
            ("c", "i"),
            ("h", "i"),
            ("c", "a"),
        ]
    )


def spider():
    """Three pendants plus a two-edge leg on a common centre."""
    return from_edges(
        [("v", "u"), ("u", "w"), ("v", "p1"), ("v", "p2"), ("v", "p3")]
    )


def asym_wing():
    """A triangle wing on one end of a short spine, pendants on the other:
    no automorphism moves the stalk."""
    return from_edges(
        [("v1", "p1"), ("v1", "p2"), ("v1", "c"), ("c", "d"), ("c", "e"), ("d", "e")]
    )


def cornered_triangle():
    """Triangle with one pendant per corner; generic, three sa sites of m=1."""
    return from_edges(
        [("a", "b"), ("a", "c"), ("b", "c"), ("a", "pa"), ("b", "pb"), ("c", "pc")]
    )


# Frozen oracle results, (theta, number of solution classes), recorded from
# exhaustive runs.  Keys are (builder name, category); the corresponding
# graph is the *base* graph and the oracle ran on its line graph.
LINEGRAPH_EXPECTED = {
    ("path_graph(4)", "sd"): (2, 1),
    ("path_graph(5)", "sd"): (3, 1),
    ("path_graph(5)", "sa"): (5, 1),
    ("cycle_graph(4)", "sd"): (4, 1),
    ("cycle_graph(4)", "sa"): (4, 1),
    ("cycle_graph(5)", "sd"): (5, 1),
    ("cycle_graph(6)", "sd"): (6, 1),
    ("plumed_triangle(1)", "sd"): (3, 2),
    ("plumed_triangle(1)", "sa"): (4, 2),
    ("plumed_triangle(1)", "sdu"): (4, 2),
    ("plumed_triangle(2)", "sd"): (4, 2),
    ("plumed_triangle(2)", "sa"): (5, 2),
    ("plumed_triangle(3)", "sd"): (5, 2),
    ("two_plumed_triangle(1,1)", "sd"): (3, 1),
    ("two_plumed_triangle(1,1)", "sa"): (5, 2),
    ("two_plumed_triangle(2,1)", "sd"): (4, 1),
    ("two_plumed_triangle(2,1)", "sa"): (6, 3),
    ("two_plumed_triangle(2,2)", "sd"): (5, 1),
    ("two_plumed_triangle(2,2)", "sa"): (7, 4),
    ("book(2)", "sd"): (4, 2),
    ("book(2)", "sa"): (4, 2),
    ("book(2)", "sdu"): (4, 2),
    ("book(3)", "sd"): (5, 2),
    ("book(3)", "sa"): (5, 2),
    ("book(3)", "sdu"): (5, 1),
    ("plumed_book(2,1)", "sd"): (4, 1),
    ("plumed_book(2,1)", "sa"): (5, 2),
    ("plumed_book(2,1,1)", "sa"): (6, 2),
    ("complete_graph(4)", "sd"): (4, 2),
    ("complete_graph(4)", "sa"): (4, 2),
    ("complete_graph(4)", "sdu"): (4, 2),
    ("friendship3()", "sd"): (7, 2),
    ("friendship3()", "sa"): (7, 1),
    ("bridged_triangles()", "sd"): (6, 3),
    ("bridged_triangles()", "sa"): (6, 1),
    ("dumbbell()", "sd"): (4, 1),
    ("dumbbell()", "sa"): (6, 3),
    ("wing_path()", "sd"): (4, 2),
    ("wing_path()", "sa"): (5, 1),
    ("trimmed_fig5()", "sd"): (4, 1),
    ("trimmed_fig5()", "sa"): (5, 1),
    ("spider()", "sd"): (4, 1),
    ("spider()", "sa"): (6, 3),
    ("asym_wing()", "sd"): (5, 2),
    ("asym_wing()", "sa"): (6, 2),
}


def random_graph(rng, max_n=8):
    """A random (possibly disconnected) graph on 2..max_n vertices."""
    n = rng.randint(2, max_n)
    labels = tuple(f"v{i}" for i in range(n))
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < 0.4:
                edges.append((a, b))
    return Graph(labels, tuple(edges))


def random_cover(rng, g):
    """A random valid edge-clique cover of ``g``.

    Every edge gets covered, every vertex gets covered; beyond that the
    cover is deliberately messy: overlapping cliques, occasional exact
    duplicates, gratuitous singletons.
    """
    from setrep import CliqueCover

    cliques = []
    todo = list(g.edges)
    rng.shuffle(todo)
    covered = set()
    for u, v in todo:
        if (u, v) in covered and rng.random() < 0.6:
            continue
        clique = {u, v}
        others = [w for w in range(g.n) if w not in clique]
        rng.shuffle(others)
        for w in others:
            if all(g.has_edge(w, x) for x in clique) and rng.random() < 0.5:
                clique.add(w)
        for a in clique:
            for b in clique:
                if a < b:
                    covered.add((a, b))
        cliques.append(frozenset(clique))
    for v in range(g.n):
        if not any(v in q for q in cliques) or rng.random() < 0.15:
            cliques.append(frozenset({v}))
    if cliques and rng.random() < 0.2:
        cliques.append(rng.choice(cliques))
    rng.shuffle(cliques)
    return CliqueCover(g, tuple(cliques))


def build(name):
    """Resolve a LINEGRAPH_EXPECTED key back into a Graph."""
    return eval(  # noqa: S307 - keys are our own literals above
        name,
        {
            "path_graph": path_graph,
            "cycle_graph": cycle_graph,
            "complete_graph": complete_graph,
            "star_graph": star_graph,
            "plumed_triangle": plumed_triangle,
            "two_plumed_triangle": two_plumed_triangle,
            "book": book,
            "plumed_book": plumed_book,
            "friendship3": friendship3,
            "bridged_triangles": bridged_triangles,
            "dumbbell": dumbbell,
            "wing_path": wing_path,
            "trimmed_fig5": trimmed_fig5,
            "spider": spider,
            "asym_wing": asym_wing,
            "cornered_triangle": cornered_triangle,
        },
    )
