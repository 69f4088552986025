"""Brute-force reference implementations straight from the definitions.

Everything here re-derives adjacency from the raw edge records and walks
graphs with its own breadth-first search — no traversal code is shared with
the fast modules, otherwise a common-mode bug could slip through the
cross-checks.  Components for the non-transitive variants come from a full
2^n subset scan, capped at n = 15.

Intended for small instances and for validating the fast solvers; speed is
explicitly a non-goal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import GraphValidationError
from .graph import EDGES, RESILIENT, VERTICES, ColoredGraph, Partition

VARIANTS = ("edge", "strong", "weak", "weak-lists")

SUBSET_SCAN_LIMIT = 15


@dataclass(frozen=True)
class AvoidanceWitness:
    """Certificate that one color cannot disconnect a pair.

    ``kind`` is ``"path"`` (with the vertex sequence, endpoints included) or
    ``"endpoint"`` for the weak clause where an attacked endpoint makes the
    question moot.
    """

    color: int
    kind: str
    path: tuple[int, ...] | None = None


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    witnesses: tuple[AvoidanceWitness, ...]
    failing_color: int | None = None
    connected_in_graph: bool = True


@dataclass(frozen=True)
class PairRelation:
    """Symmetric boolean pair matrix; the diagonal is unused."""

    n: int
    related: np.ndarray

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.related[u, v]:
                    out.append((u, v))
        return out

    def is_transitive(self) -> bool:
        for u in range(self.n):
            for v in range(self.n):
                if u != v and self.related[u, v]:
                    for w in range(self.n):
                        if w != u and w != v and self.related[v, w]:
                            if not self.related[u, w]:
                                return False
        return True


def _check_variant(g: ColoredGraph, variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if variant == "edge" and g.coloring_target != EDGES:
        raise GraphValidationError("edge variant needs an edge-colored graph")
    if variant != "edge" and g.coloring_target != VERTICES:
        raise GraphValidationError(f"{variant} variant needs a vertex-colored graph")


def _vertex_removed(g: ColoredGraph, v: int, c: int) -> bool:
    colors = g.vertex_colors[v]
    if g.multi_color_mode == RESILIENT:
        return colors == frozenset((c,))
    return c in colors


def _full_adjacency(g: ColoredGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    return adj


def _edge_adjacency_avoiding(g: ColoredGraph, c: int) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        if c not in e.colors:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
    return adj


def _bfs_path(adj, source: int, target: int, allowed) -> list[int] | None:
    """Shortest path from source to target using vertices that satisfy
    ``allowed`` (endpoints are always allowed); None when unreachable."""
    if source == target:
        return [source]
    parent = {source: -1}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in parent:
                continue
            if y == target:
                parent[y] = x
                path = [y]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return path[::-1]
            if allowed(y):
                parent[y] = x
                queue.append(y)
    return None


def _pair_avoiding(g: ColoredGraph, u: int, v: int, c: int, variant: str) -> bool:
    if variant == "edge":
        adj = _edge_adjacency_avoiding(g, c)
        return _bfs_path(adj, u, v, lambda y: True) is not None
    adj = _full_adjacency(g)
    if variant == "strong":
        return (
            _bfs_path(adj, u, v, lambda y: not _vertex_removed(g, y, c)) is not None
        )
    # weak and weak-lists: same definition, lists already live on the graph
    if _vertex_removed(g, u, c) or _vertex_removed(g, v, c):
        return True
    allowed = lambda y: not _vertex_removed(g, y, c)
    return _bfs_path(adj, u, v, allowed) is not None


def _weak_base_connected(g: ColoredGraph, u: int, v: int) -> bool:
    return _bfs_path(_full_adjacency(g), u, v, lambda y: True) is not None


def oracle_pairwise(g: ColoredGraph, variant: str) -> PairRelation:
    """Literal per-pair, per-color deletion + reachability check."""
    _check_variant(g, variant)
    n = g.n
    related = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if variant in ("weak", "weak-lists") and not _weak_base_connected(g, u, v):
                continue
            ok = all(
                _pair_avoiding(g, u, v, c, variant) for c in range(g.palette_size)
            )
            related[u, v] = related[v, u] = ok
    return PairRelation(n, related)


def oracle_components(rel: PairRelation, variant: str):
    """Components of a pairwise relation, by elementary means.

    Edge variant: the relation is an equivalence, so its classes are the
    connected components of the relation graph (found by search) and a
    Partition is returned.  The vertex variants are not transitive: all
    maximal pairwise-related subsets are found by scanning every one of the
    2^n subsets, and a canonical clique list is returned.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    n = rel.n
    if variant == "edge":
        labels = np.full(n, -1, dtype=np.int64)
        for v in range(n):
            if labels[v] >= 0:
                continue
            stack = [v]
            labels[v] = v
            while stack:
                x = stack.pop()
                for y in range(n):
                    if y != x and rel.related[x, y] and labels[y] < 0:
                        labels[y] = v
                        stack.append(y)
        return Partition(labels)

    if n > SUBSET_SCAN_LIMIT:
        raise ValueError(
            f"subset scan is capped at n = {SUBSET_SCAN_LIMIT}, got n = {n}"
        )
    rows = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rel.related[u, v]:
                rows[u] |= 1 << v
    found = []
    for s in range(1, 1 << n):
        members = [v for v in range(n) if s >> v & 1]
        if any(rows[v] & s != s & ~(1 << v) for v in members):
            continue
        # pairwise related; maximal iff no outside vertex relates to all
        if any(rows[w] & s == s for w in range(n) if not s >> w & 1):
            continue
        found.append(tuple(members))
    return sorted(found)


def extract_witnesses(
    g: ColoredGraph, u: int, v: int, variant: str
) -> WitnessReport:
    """One witness per color, or the first color with none.

    Path witnesses are concrete avoiding paths; the weak variants use the
    endpoint clause where it applies and also report a pair that is simply
    disconnected in the base graph.
    """
    _check_variant(g, variant)
    u = g.check_vertex(u)
    v = g.check_vertex(v)
    if u == v and variant != "edge":
        raise GraphValidationError("u and v must be distinct vertices")
    weak = variant in ("weak", "weak-lists")
    if weak and not _weak_base_connected(g, u, v):
        return WitnessReport(False, (), None, connected_in_graph=False)
    witnesses = []
    for c in range(g.palette_size):
        if variant == "edge":
            path = _bfs_path(_edge_adjacency_avoiding(g, c), u, v, lambda y: True)
        elif variant == "strong":
            path = _bfs_path(
                _full_adjacency(g), u, v, lambda y: not _vertex_removed(g, y, c)
            )
        else:
            if _vertex_removed(g, u, c) or _vertex_removed(g, v, c):
                witnesses.append(AvoidanceWitness(c, "endpoint"))
                continue
            path = _bfs_path(
                _full_adjacency(g), u, v, lambda y: not _vertex_removed(g, y, c)
            )
        if path is None:
            return WitnessReport(False, tuple(witnesses), c)
        witnesses.append(AvoidanceWitness(c, "path", tuple(path)))
    return WitnessReport(True, tuple(witnesses), None)


def validate_witness(
    g: ColoredGraph, u: int, v: int, variant: str, w: AvoidanceWitness
) -> bool:
    """Machine-check a witness against the definition it certifies."""
    _check_variant(g, variant)
    c = w.color
    if w.kind == "endpoint":
        return variant in ("weak", "weak-lists") and (
            _vertex_removed(g, u, c) or _vertex_removed(g, v, c)
        )
    path = w.path
    if not path or path[0] != u or path[-1] != v:
        return False
    adj_any = _full_adjacency(g)
    for a, b in zip(path, path[1:]):
        if variant == "edge":
            if not any(
                c not in e.colors
                for e in g.edges
                if {e.u, e.v} == {a, b}
            ):
                return False
        elif b not in adj_any[a]:
            return False
    if variant == "strong":
        return all(not _vertex_removed(g, x, c) for x in path[1:-1])
    if variant in ("weak", "weak-lists"):
        return all(not _vertex_removed(g, x, c) for x in path)
    return True
