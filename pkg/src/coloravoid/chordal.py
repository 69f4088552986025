"""Chordality machinery and polynomial maximal-clique enumeration.

The weak pairwise graph is always locally chordal (every open neighborhood
induces a chordal graph; equivalently there is no induced wheel on five or
more vertices).  That makes its maximal cliques enumerable in polynomial
time: for each vertex v, the maximal cliques containing v are exactly
{v} + (maximal cliques of the chordal graph induced on N(v)) — any vertex
extending such a set would itself lie in N(v).  Chordal-graph cliques come
from a maximum cardinality search, which doubles as the chordality
verifier, so the locally chordal solver checks the property it relies on
instead of trusting it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    GraphValidationError,
    InvalidEliminationOrderError,
    LocalChordalityError,
)
from .graph import PairwiseGraph, canonical_cliques


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order whose suffix-neighborhoods are cliques.

    ``order[0]`` is eliminated first.  Existence of such an order is
    equivalent to chordality.
    """

    order: tuple[int, ...]


@dataclass(frozen=True)
class NotChordalEvidence:
    """Witness that a graph is not chordal.

    In the order attempted by the search, ``u`` and ``w`` are neighbors of
    ``v`` that are eliminated after it yet are themselves non-adjacent.  A
    maximum cardinality search produces a perfect elimination order on every
    chordal graph, so one violating triple certifies non-chordality.
    """

    triple: tuple[int, int, int]


def maximum_cardinality_search(
    h: PairwiseGraph,
) -> EliminationOrder | NotChordalEvidence:
    """Perfect elimination order of ``h``, or evidence there is none."""
    indptr, indices = h.csr()
    order, chordal, v, u, w, _, _ = kernels.chordal_scan(h.n, indptr, indices)
    if not chordal:
        return NotChordalEvidence((int(v), int(u), int(w)))
    # The kernel selects toward the front; elimination runs the other way.
    return EliminationOrder(tuple(int(x) for x in order[::-1]))


def _peo_violation(
    h: PairwiseGraph, order: tuple[int, ...]
) -> tuple[int, int, int] | None:
    """First violating triple of the elimination property, or None.

    Direct check: every pair of later neighbors of each vertex must be
    adjacent.  Quadratic per vertex, used to validate caller-supplied
    orders at desk scale.
    """
    n = h.n
    if sorted(order) != list(range(n)):
        raise GraphValidationError("order is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in h.neighbors(v) if pos[w] > pos[v]]
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not h.has_edge(later[i], later[j]):
                    return (v, int(later[i]), int(later[j]))
    return None


def is_perfect_elimination_order(h: PairwiseGraph, ord: EliminationOrder) -> bool:
    return _peo_violation(h, ord.order) is None


def maximal_cliques_chordal(
    h: PairwiseGraph, ord: EliminationOrder
) -> list[tuple[int, ...]]:
    """All maximal cliques of a chordal graph from a perfect elimination
    order: the candidates are {v} + later-neighbors(v), filtered for
    maximality.  At most n cliques exist.
    """
    violation = _peo_violation(h, ord.order)
    if violation is not None:
        raise InvalidEliminationOrderError(violation)
    pos = {v: i for i, v in enumerate(ord.order)}
    later: dict[int, set[int]] = {
        v: {int(w) for w in h.neighbors(v) if pos[int(w)] > pos[v]}
        for v in ord.order
    }
    cliques = []
    for v in ord.order:
        cand = later[v] | {v}
        # A containing candidate must come from an earlier neighbor u with
        # v among u's later neighbors.
        maximal = True
        for u in h.neighbors(v):
            u = int(u)
            if pos[u] < pos[v] and (later[v] - {u}) <= later[u]:
                maximal = False
                break
        if maximal:
            cliques.append(cand)
    return canonical_cliques(cliques)


def _closed_neighborhood_reps(h: PairwiseGraph) -> list[int]:
    """One representative per closed-neighborhood (true twin) class.

    True twins are interchangeable for both chordality of neighborhoods and
    clique membership: if a maximal clique meets a twin class it contains
    every member's representative, so scanning representatives alone still
    reaches every maximal clique.
    """
    closed = h.adj.copy()
    np.fill_diagonal(closed, True)
    seen: dict[bytes, int] = {}
    reps = []
    for v in range(h.n):
        key = closed[v].tobytes()
        if key not in seen:
            seen[key] = v
            reps.append(v)
    return reps


def _scan_neighborhood(h: PairwiseGraph, v: int):
    """chordal_scan of the induced open neighborhood of v.

    Returns (nbrs, chordal, triple, data, starts); clique entries are local
    indices into ``nbrs``.
    """
    nbrs = h.neighbors(v)
    indptr, indices = h.subgraph_csr(nbrs)
    _, chordal, a, b, c, data, starts = kernels.chordal_scan(
        nbrs.shape[0], indptr, indices
    )
    if not chordal:
        triple = (int(nbrs[a]), int(nbrs[b]), int(nbrs[c]))
        return nbrs, False, triple, data, starts
    return nbrs, True, None, data, starts


def local_chordality_violation(
    h: PairwiseGraph,
) -> tuple[int, tuple[int, int, int]] | None:
    """Hub vertex and triple witnessing a non-chordal neighborhood, or None."""
    for v in _closed_neighborhood_reps(h):
        _, chordal, triple, _, _ = _scan_neighborhood(h, v)
        if not chordal:
            return v, triple
    return None


def is_locally_chordal(h: PairwiseGraph) -> bool:
    """True iff every open neighborhood induces a chordal graph.

    Equivalent to containing no induced wheel on five or more vertices.
    """
    return local_chordality_violation(h) is None


def maximal_cliques_locally_chordal(h: PairwiseGraph) -> list[tuple[int, ...]]:
    """All maximal cliques of a locally chordal graph, in polynomial time.

    {v} + (maximal clique of h[N(v)]) is always maximal in h, since any
    extender would lie in N(v); the union over vertices covers every maximal
    clique, and isolated vertices contribute singletons.  Local chordality
    is verified, not assumed: a violating neighborhood raises
    LocalChordalityError.  Before deduplication the output size is bounded
    by the degree sum.
    """
    cliques: set[tuple[int, ...]] = set()
    for v in _closed_neighborhood_reps(h):
        nbrs, chordal, triple, data, starts = _scan_neighborhood(h, v)
        if not chordal:
            raise LocalChordalityError(v, triple)
        if nbrs.shape[0] == 0:
            cliques.add((v,))
            continue
        for i in range(starts.shape[0] - 1):
            members = nbrs[data[starts[i] : starts[i + 1]]]
            cliques.add(tuple(sorted([v, *(int(x) for x in members)])))
    return sorted(cliques)
