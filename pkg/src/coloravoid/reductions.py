"""Hardness-gadget generators: colored instances whose weak-list components
coincide with the maximal cliques of a plain input graph.

Full gadget: one fresh color per vertex pair, added to the list of every
*other* vertex.  Attacking the color of pair {a, b} then wipes out everyone
except a and b, so a and b stay weakly connected iff they are adjacent; all
other colors are moot through the endpoint clause.  With n vertices this
uses C(n, 2) colors and every list has exactly C(n, 2) - (n - 1) entries.

Reduced gadget: colors only for non-adjacent pairs — adjacent pairs need
none because a direct edge survives every attack.  Vertices adjacent to
everything else may end up with empty lists, which is why vertex color sets
are allowed to be empty.
"""

from __future__ import annotations

from itertools import combinations

from .errors import GraphValidationError
from .graph import VERTICES, ColoredGraph, Edge, PairwiseGraph


def _gadget(h: PairwiseGraph, pair_filter) -> ColoredGraph:
    n = h.n
    if n < 2:
        raise GraphValidationError("gadget construction needs at least 2 vertices")
    colored_pairs = [
        (a, b) for a, b in combinations(range(n), 2) if pair_filter(a, b)
    ]
    lists: list[set[int]] = [set() for _ in range(n)]
    for cid, (a, b) in enumerate(colored_pairs):
        for w in range(n):
            if w != a and w != b:
                lists[w].add(cid)
    edges = [Edge(u, v, frozenset()) for u, v in h.edges()]
    return ColoredGraph(
        n,
        len(colored_pairs),
        VERTICES,
        edges,
        vertex_colors=lists,
    )


def clique_gadget(h: PairwiseGraph) -> ColoredGraph:
    """Vertex-list instance with one color per vertex pair (lex order)."""
    return _gadget(h, lambda a, b: True)


def clique_gadget_reduced(h: PairwiseGraph) -> ColoredGraph:
    """Variant coloring only non-adjacent pairs; same component guarantee."""
    return _gadget(h, lambda a, b: not h.has_edge(a, b))
