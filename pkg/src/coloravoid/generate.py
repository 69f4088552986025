"""Seeded random instance generation.

The PRNG contract is part of the public interface so runs can be reproduced
independently: a ``numpy.random.Generator`` seeded with ``PCG64(seed)``
drives everything.  Edges of G(n, p) are emitted by geometric skipping over
the lexicographic pair sequence (0,1), (0,2), (1,2), (0,3), ... drawing one
``random()`` variate per skip; afterwards a single ``integers(0, k, size=m)``
draw colors the edges (edge mode) or ``integers(0, k, size=n)`` colors the
vertices (vertex mode), one uniform color per element.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import EDGES, VERTICES, ColoredGraph, Edge


def _er_pairs(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    if n < 2 or p <= 0.0:
        return []
    if p >= 1.0:
        return [(u, v) for v in range(1, n) for u in range(v)]
    pairs = []
    log_q = math.log1p(-p)
    v = 1
    w = -1
    while v < n:
        r = rng.random()
        w += 1 + int(math.log(1.0 - r) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            pairs.append((w, v))
    return pairs


def generate_er(
    n: int, p: float, k: int, target: str, seed: int
) -> ColoredGraph:
    """Erdős–Rényi G(n, p) with one uniform color per edge or vertex.

    Each unordered pair is an edge independently with probability ``p``;
    deterministic for a fixed seed (see the module docstring for the exact
    variate stream).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    if k < 1:
        raise ValueError(f"palette size must be at least 1, got {k}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if target not in (EDGES, VERTICES):
        raise ValueError(f"target must be 'edges' or 'vertices', got {target!r}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = _er_pairs(n, p, rng)
    if target == EDGES:
        colors = rng.integers(0, k, size=len(pairs))
        edges = [
            Edge(u, v, frozenset((int(c),))) for (u, v), c in zip(pairs, colors)
        ]
        return ColoredGraph(n, k, EDGES, edges)
    vcolors = rng.integers(0, k, size=n)
    edges = [Edge(u, v, frozenset()) for u, v in pairs]
    return ColoredGraph(
        n, k, VERTICES, edges, vertex_colors=[{int(c)} for c in vcolors]
    )
