"""Strong and weak color-avoiding vertex-connectivity.

Strong: for every color there must be a path whose *internal* vertices
survive the attack on that color; the endpoints are exempt.  Weak: for every
color, either an endpoint itself is removed by the attack or both endpoints
survive and stay in one component.  Weak connectivity additionally requires
the pair to be connected in the original graph, which extends the definition
to non-connected inputs; that clause is applied uniformly, including when an
endpoint carries the attacked color.

Multi-color vertices follow the graph's ``multi_color_mode``: vulnerable
lists die with any listed color, resilient multi-color vertices never die.

Neither relation is transitive, so the pairwise results are returned as
PairwiseGraph objects whose maximal cliques are the components (see the
clique solvers).  Builders cost O(k (n + m)) for the partitions plus
O(k n^2) for the pair matrices.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import kernels
from .errors import GraphValidationError
from .graph import VERTICES, ColoredGraph, PairwiseGraph, Partition


def _require_vertex_colored(g: ColoredGraph) -> None:
    if g.coloring_target != VERTICES:
        raise GraphValidationError(
            "operation requires a vertex-colored graph "
            f"(coloring target is {g.coloring_target!r})"
        )


def _surviving_labels(g: ColoredGraph, removed: np.ndarray) -> np.ndarray:
    """Component labels on the survivors (-1 for removed vertices)."""
    eu, ev = g.edge_endpoints
    if g.m:
        keep = ~(removed[eu] | removed[ev])
        eu, ev = eu[keep], ev[keep]
    labels = kernels.cc_labels(g.n, eu, ev)
    labels = labels.copy()
    labels[removed] = -1
    return labels


def vertex_surviving_partition(g: ColoredGraph, c: int) -> Partition:
    """Components of the induced subgraph on the survivors of one attack."""
    _require_vertex_colored(g)
    c = g.check_color(c)
    return Partition(_surviving_labels(g, g.removal_mask(c)))


def _per_color(g: ColoredGraph, threads: int = 1):
    """Per color: (removal mask, survivor labels).  Lists are independent."""
    k = g.palette_size
    masks = [g.removal_mask(c) for c in range(k)]
    if threads > 1 and k > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            labels = list(pool.map(lambda c: _surviving_labels(g, masks[c]), range(k)))
    else:
        labels = [_surviving_labels(g, m) for m in masks]
    return masks, labels


def _check_pair(g: ColoredGraph, u: int, v: int) -> tuple[int, int]:
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if u == v:
        raise GraphValidationError("u and v must be distinct vertices")
    return u, v


def _touched_blocks(g: ColoredGraph, x: int, labels: np.ndarray) -> set[int]:
    """Blocks of the surviving partition that x lies in or is adjacent to."""
    if labels[x] >= 0:
        return {int(labels[x])}
    return {int(labels[w]) for w in g.neighbor_sets[x] if labels[w] >= 0}


def strongly_avoiding(g: ColoredGraph, u: int, v: int, c: int) -> bool:
    """Is there a u-v path whose internal vertices survive attacking c?

    A direct edge always qualifies (it has no internal vertices); otherwise
    u and v must touch a common survivor block.
    """
    _require_vertex_colored(g)
    u, v = _check_pair(g, u, v)
    c = g.check_color(c)
    if v in g.neighbor_sets[u]:
        return True
    labels = _surviving_labels(g, g.removal_mask(c))
    if labels[u] >= 0 and labels[v] >= 0:
        return labels[u] == labels[v]
    return not _touched_blocks(g, u, labels).isdisjoint(_touched_blocks(g, v, labels))


def weakly_avoiding(g: ColoredGraph, u: int, v: int, c: int) -> bool:
    """Weak single-color test: endpoint removed, or both in one survivor
    block; always requires u, v connected in the original graph."""
    _require_vertex_colored(g)
    u, v = _check_pair(g, u, v)
    c = g.check_color(c)
    eu, ev = g.edge_endpoints
    base = kernels.cc_labels(g.n, eu, ev)
    if base[u] != base[v]:
        return False
    removed = g.removal_mask(c)
    if removed[u] or removed[v]:
        return True
    labels = _surviving_labels(g, removed)
    return labels[u] == labels[v]


def strong_pairwise_graph(g: ColoredGraph, threads: int = 1) -> PairwiseGraph:
    """Pairwise graph of strong color-avoiding connectivity.

    Edge uv present iff u and v are strongly avoiding for every color.
    Survivor pairs are compared block-wise in bulk; vertices removed by a
    color are reattached through the survivor blocks their neighbors touch.
    """
    _require_vertex_colored(g)
    n = g.n
    adj = g.adjacency
    ok = np.ones((n, n), dtype=bool)
    masks, labels = _per_color(g, threads=threads)
    for c in range(g.palette_size):
        lab = labels[c]
        alive = lab >= 0
        same = (lab[:, None] == lab[None, :]) & alive[:, None] & alive[None, :]
        this = same | adj
        hit = np.nonzero(masks[c])[0]
        if hit.size:
            touched = [_touched_blocks(g, int(x), lab) for x in hit]
            for x, tb in zip(hit, touched):
                if tb:
                    reach = np.isin(lab, sorted(tb))
                    this[x, reach] = True
                    this[reach, x] = True
            for i in range(hit.size):
                for j in range(i + 1, hit.size):
                    if not touched[i].isdisjoint(touched[j]):
                        this[hit[i], hit[j]] = True
                        this[hit[j], hit[i]] = True
        ok &= this
    np.fill_diagonal(ok, False)
    return PairwiseGraph(ok)


def weak_pairwise_graph(g: ColoredGraph, threads: int = 1) -> PairwiseGraph:
    """Pairwise graph of weak color-avoiding connectivity."""
    _require_vertex_colored(g)
    n = g.n
    eu, ev = g.edge_endpoints
    base = kernels.cc_labels(n, eu, ev)
    ok = base[:, None] == base[None, :]
    masks, labels = _per_color(g, threads=threads)
    for c in range(g.palette_size):
        lab = labels[c]
        alive = lab >= 0
        same = (lab[:, None] == lab[None, :]) & alive[:, None] & alive[None, :]
        removed = masks[c]
        ok &= same | removed[:, None] | removed[None, :]
    np.fill_diagonal(ok, False)
    return PairwiseGraph(ok)
