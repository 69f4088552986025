"""Core data model: colored graphs, vertex partitions, pairwise graphs.

All types are immutable after construction and safe to share between
threads for concurrent reads.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import GraphValidationError

EDGES = "edges"
VERTICES = "vertices"
VULNERABLE = "vulnerable"
RESILIENT = "resilient"

COLORING_TARGETS = (EDGES, VERTICES)
MULTI_COLOR_MODES = (VULNERABLE, RESILIENT)


class Edge(NamedTuple):
    """One edge record.  Parallel records between the same endpoints are
    kept separate: a parallel pair of differently colored edges survives any
    single-color attack, whereas one edge carrying a two-color list survives
    none."""

    u: int
    v: int
    colors: frozenset[int]


def _as_edge(item) -> Edge:
    if isinstance(item, Edge):
        return item
    u, v, colors = item
    return Edge(int(u), int(v), frozenset(int(c) for c in colors))


class ColoredGraph:
    """A graph whose edges *or* vertices carry sets of color ids.

    Colors are dense integer ids ``0..palette_size-1``; the palette size is
    declared explicitly so that unused colors are representable (removing an
    unused color is a no-op).  Vertex ids are ``0..n-1``.

    ``coloring_target`` is ``"edges"`` or ``"vertices"``.  In edge mode every
    edge carries a nonempty color set and vertices carry none.  In vertex
    mode edges carry no colors; vertex color sets may have any size,
    including zero (a vertex with no colors is never removed by any attack)
    and more than one (a list of colors).

    ``multi_color_mode`` picks the reading of multi-color vertex lists:

    * ``"vulnerable"`` (default): a vertex is removed whenever *any* color on
      its list is attacked — the list is a list of vulnerabilities.
    * ``"resilient"``: a vertex with two or more colors is never removed —
      redundant colors make it immortal, analogous to parallel edges.
    """

    def __init__(
        self,
        n: int,
        palette_size: int,
        coloring_target: str,
        edges: Iterable = (),
        vertex_colors: Iterable[Iterable[int]] | None = None,
        multi_color_mode: str = VULNERABLE,
    ):
        self.n = int(n)
        self.palette_size = int(palette_size)
        self.coloring_target = coloring_target
        self.multi_color_mode = multi_color_mode
        self.edges: tuple[Edge, ...] = tuple(_as_edge(e) for e in edges)
        if vertex_colors is None:
            self.vertex_colors: tuple[frozenset[int], ...] = tuple(
                frozenset() for _ in range(self.n)
            )
        else:
            self.vertex_colors = tuple(
                frozenset(int(c) for c in cs) for cs in vertex_colors
            )
        self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise GraphValidationError("vertex count must be nonnegative")
        if self.palette_size < 0:
            raise GraphValidationError("palette size must be nonnegative")
        if self.coloring_target not in COLORING_TARGETS:
            raise GraphValidationError(
                f"coloring target must be one of {COLORING_TARGETS}"
            )
        if self.multi_color_mode not in MULTI_COLOR_MODES:
            raise GraphValidationError(
                f"multi-color mode must be one of {MULTI_COLOR_MODES}"
            )
        if len(self.vertex_colors) != self.n:
            raise GraphValidationError(
                f"expected {self.n} vertex color sets, got {len(self.vertex_colors)}"
            )
        for v, cs in enumerate(self.vertex_colors):
            if self.coloring_target == EDGES and cs:
                raise GraphValidationError(
                    f"vertex {v} carries colors in an edge-colored graph"
                )
            for c in cs:
                if not 0 <= c < self.palette_size:
                    raise GraphValidationError(
                        f"vertex {v}: color {c} out of range "
                        f"(palette size {self.palette_size})"
                    )
        for i, e in enumerate(self.edges):
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise GraphValidationError(f"edge {i}: endpoint out of range")
            if e.u == e.v:
                raise GraphValidationError(f"edge {i}: self-loop at vertex {e.u}")
            if self.coloring_target == EDGES and not e.colors:
                raise GraphValidationError(f"edge {i}: edge color set is empty")
            if self.coloring_target == VERTICES and e.colors:
                raise GraphValidationError(
                    f"edge {i}: edge carries colors in a vertex-colored graph"
                )
            for c in e.colors:
                if not 0 <= c < self.palette_size:
                    raise GraphValidationError(
                        f"edge {i}: color {c} out of range "
                        f"(palette size {self.palette_size})"
                    )

    # -- derived views (built lazily, cached; the object stays immutable) --

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        """Edge endpoints as two aligned int64 arrays."""
        eu = np.fromiter((e.u for e in self.edges), dtype=np.int64, count=self.m)
        ev = np.fromiter((e.v for e in self.edges), dtype=np.int64, count=self.m)
        return eu, ev

    @cached_property
    def edge_color_matrix(self) -> np.ndarray:
        """Boolean (m, palette_size) membership matrix of edge color sets."""
        mat = np.zeros((self.m, self.palette_size), dtype=bool)
        for i, e in enumerate(self.edges):
            for c in e.colors:
                mat[i, c] = True
        return mat

    @cached_property
    def vertex_color_matrix(self) -> np.ndarray:
        """Boolean (n, palette_size) membership matrix of vertex color sets."""
        mat = np.zeros((self.n, self.palette_size), dtype=bool)
        for v, cs in enumerate(self.vertex_colors):
            for c in cs:
                mat[v, c] = True
        return mat

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency of the underlying simple graph."""
        adj = np.zeros((self.n, self.n), dtype=bool)
        for e in self.edges:
            adj[e.u, e.v] = True
            adj[e.v, e.u] = True
        return adj

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            nbrs[e.u].add(e.v)
            nbrs[e.v].add(e.u)
        return tuple(frozenset(s) for s in nbrs)

    def removal_mask(self, color: int) -> np.ndarray:
        """Boolean mask of vertices removed when ``color`` is attacked.

        Honors ``multi_color_mode``: in resilient mode only single-color
        vertices of the attacked color are removed.
        """
        if self.coloring_target != VERTICES:
            raise GraphValidationError("removal_mask applies to vertex-colored graphs")
        if not 0 <= color < self.palette_size:
            raise GraphValidationError(
                f"color {color} out of range (palette size {self.palette_size})"
            )
        vc = self.vertex_color_matrix
        hit = vc[:, color]
        if self.multi_color_mode == RESILIENT:
            return hit & (vc.sum(axis=1) == 1)
        return hit

    def check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise GraphValidationError(f"vertex {v} out of range (n={self.n})")
        return v

    def check_color(self, c: int) -> int:
        c = int(c)
        if not 0 <= c < self.palette_size:
            raise GraphValidationError(
                f"color {c} out of range (palette size {self.palette_size})"
            )
        return c

    def with_mode(self, mode: str) -> "ColoredGraph":
        """Copy of this graph under the other multi-color reading."""
        if mode == self.multi_color_mode:
            return self
        return ColoredGraph(
            self.n,
            self.palette_size,
            self.coloring_target,
            self.edges,
            self.vertex_colors,
            multi_color_mode=mode,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.palette_size == other.palette_size
            and self.coloring_target == other.coloring_target
            and self.multi_color_mode == other.multi_color_mode
            and self.vertex_colors == other.vertex_colors
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash(
            (
                self.n,
                self.palette_size,
                self.coloring_target,
                self.multi_color_mode,
                self.vertex_colors,
                self.edges,
            )
        )

    def __repr__(self) -> str:
        return (
            f"ColoredGraph(n={self.n}, m={self.m}, k={self.palette_size}, "
            f"target={self.coloring_target!r}, mode={self.multi_color_mode!r})"
        )


class Partition:
    """A labeling of a vertex subset into disjoint blocks.

    ``labels[v]`` is the block label of ``v``, or ``-1`` for vertices outside
    the domain.  Block labels are canonical: the label of a block is the
    minimum vertex id it contains, which makes outputs deterministic and
    diffable.
    """

    def __init__(self, labels: np.ndarray):
        self.labels = np.asarray(labels, dtype=np.int64)
        self.labels.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.labels.shape[0])

    @cached_property
    def domain(self) -> np.ndarray:
        return np.nonzero(self.labels >= 0)[0]

    def block_of(self, v: int) -> int:
        lbl = int(self.labels[v])
        if lbl < 0:
            raise KeyError(f"vertex {v} is not in the partition domain")
        return lbl

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.labels[v] >= 0

    def same_block(self, u: int, v: int) -> bool:
        return (
            self.labels[u] >= 0
            and self.labels[v] >= 0
            and self.labels[u] == self.labels[v]
        )

    def blocks(self) -> list[list[int]]:
        """Blocks as sorted lists, ordered by canonical label."""
        by_label: dict[int, list[int]] = {}
        for v in self.domain:
            by_label.setdefault(int(self.labels[v]), []).append(int(v))
        return [by_label[lbl] for lbl in sorted(by_label)]

    @cached_property
    def block_sizes(self) -> dict[int, int]:
        labels = self.labels[self.labels >= 0]
        uniq, counts = np.unique(labels, return_counts=True)
        return {int(l): int(c) for l, c in zip(uniq, counts)}

    @property
    def num_blocks(self) -> int:
        return len(self.block_sizes)

    def largest_block_size(self) -> int:
        return max(self.block_sizes.values(), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, blocks={self.num_blocks})"


def canonicalize_labels(raw: np.ndarray, domain_mask: np.ndarray | None = None) -> Partition:
    """Build a Partition from arbitrary per-vertex block keys.

    Vertices with equal keys share a block; the block label becomes the
    minimum member id.  ``domain_mask`` restricts the domain (out-of-domain
    vertices get -1).
    """
    raw = np.asarray(raw)
    n = raw.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    if domain_mask is None:
        idx = np.arange(n)
    else:
        idx = np.nonzero(domain_mask)[0]
    if idx.size:
        keys = raw[idx]
        _, inverse = np.unique(keys, return_inverse=True)
        mins = np.full(inverse.max() + 1, n, dtype=np.int64)
        np.minimum.at(mins, inverse, idx)
        labels[idx] = mins[inverse]
    return Partition(labels)


class PairwiseGraph:
    """An uncolored simple graph encoding a pairwise avoidance relation.

    Stored as a dense symmetric boolean matrix with an empty diagonal.
    """

    def __init__(self, adjacency: np.ndarray):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphValidationError("adjacency must be a square matrix")
        if adj.shape[0] and adj.diagonal().any():
            raise GraphValidationError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise GraphValidationError("adjacency must be symmetric")
        adj.setflags(write=False)
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PairwiseGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            adj[u, v] = True
            adj[v, u] = True
        return cls(adj)

    @classmethod
    def empty(cls, n: int) -> "PairwiseGraph":
        return cls(np.zeros((n, n), dtype=bool))

    @property
    def n(self) -> int:
        return int(self.adj.shape[0])

    @cached_property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        return np.nonzero(self.adj[v])[0]

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj, k=1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices), rows sorted ascending."""
        counts = self.adj.sum(axis=1, dtype=np.int64)
        indptr = np.concatenate(([0], np.cumsum(counts)))
        indices = np.nonzero(self.adj)[1].astype(np.int64)
        return indptr, indices

    def subgraph_csr(self, vertices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """CSR of the induced subgraph on ``vertices`` (local 0..len-1 ids)."""
        sub = self.adj[np.ix_(vertices, vertices)]
        counts = sub.sum(axis=1, dtype=np.int64)
        indptr = np.concatenate(([0], np.cumsum(counts)))
        indices = np.nonzero(sub)[1].astype(np.int64)
        return indptr, indices

    def is_subgraph_of(self, other: "PairwiseGraph") -> bool:
        return self.n == other.n and not (self.adj & ~other.adj).any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairwiseGraph):
            return NotImplemented
        return np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"PairwiseGraph(n={self.n}, m={self.edge_count})"


def canonical_cliques(cliques: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Canonical clique list: members sorted, list sorted, duplicates removed."""
    return sorted({tuple(sorted(int(v) for v in c)) for c in cliques})
