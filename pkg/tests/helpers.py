"""Shared test utilities: fixture loading, random instances, tiny oracles."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import numpy as np

from coloravoid import ColoredGraph, Edge, PairwiseGraph, parse_edge_list, parse_graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


def load_cag(name: str) -> ColoredGraph:
    return parse_graph(fixture_text(name))


def load_edgelist(name: str) -> PairwiseGraph:
    return parse_edge_list(fixture_text(name))


def rand_pairs(rng: np.random.Generator, n: int, p: float) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]


def rand_plain(rng: np.random.Generator, n: int, p: float) -> PairwiseGraph:
    return PairwiseGraph.from_edges(n, rand_pairs(rng, n, p))


def rand_edge_graph(
    rng: np.random.Generator,
    n: int,
    k: int,
    p: float,
    lists: bool = False,
    parallel: bool = False,
) -> ColoredGraph:
    edges = []
    for u, v in rand_pairs(rng, n, p):
        if lists:
            size = int(rng.integers(1, k + 1))
            colors = rng.choice(k, size=size, replace=False)
        else:
            colors = [int(rng.integers(0, k))]
        edges.append(Edge(u, v, frozenset(int(c) for c in colors)))
        if parallel and rng.random() < 0.2:
            edges.append(Edge(u, v, frozenset((int(rng.integers(0, k)),))))
    return ColoredGraph(n, k, "edges", edges)


def rand_vertex_graph(
    rng: np.random.Generator,
    n: int,
    k: int,
    p: float,
    lists: bool = False,
    mode: str = "vulnerable",
) -> ColoredGraph:
    colors = []
    for _ in range(n):
        if lists:
            size = int(rng.integers(1, min(k, 3) + 1))
            colors.append({int(c) for c in rng.choice(k, size=size, replace=False)})
        else:
            colors.append({int(rng.integers(0, k))})
    edges = [Edge(u, v, frozenset()) for u, v in rand_pairs(rng, n, p)]
    return ColoredGraph(n, k, "vertices", edges, vertex_colors=colors, multi_color_mode=mode)


def rand_tree_edges(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    return [(int(rng.integers(0, v)), v) for v in range(1, n)]


def rand_chordal(rng: np.random.Generator, n: int) -> PairwiseGraph:
    """Random chordal graph built so 0..n-1 is a perfect elimination order:
    each vertex connects to a later anchor plus a subset of the anchor's
    later neighborhood, which is a clique by induction."""
    later: list[set[int]] = [set() for _ in range(n)]
    for v in range(n - 2, -1, -1):
        anchor = int(rng.integers(v + 1, n))
        pool = sorted(later[anchor])
        take = [w for w in pool if rng.random() < 0.5]
        later[v] = {anchor, *take}
    pairs = [(v, w) for v in range(n) for w in later[v]]
    return PairwiseGraph.from_edges(n, pairs)


def subset_max_cliques(h: PairwiseGraph) -> list[tuple[int, ...]]:
    """Independent 2^n maximal-clique scan for plain graphs (test oracle)."""
    n = h.n
    assert n <= 15
    rows = [0] * n
    for u, v in h.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    out = []
    for s in range(1, 1 << n):
        ok = True
        for v in range(n):
            if s >> v & 1 and rows[v] & s != s & ~(1 << v):
                ok = False
                break
        if not ok:
            continue
        if any(rows[w] & s == s for w in range(n) if not s >> w & 1):
            continue
        out.append(tuple(v for v in range(n) if s >> v & 1))
    return sorted(out)


def pair_set(adjacency: np.ndarray) -> set[tuple[int, int]]:
    n = adjacency.shape[0]
    return {
        (u, v) for u in range(n) for v in range(u + 1, n) if adjacency[u, v]
    }
