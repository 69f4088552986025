"""Exact component solvers on pairwise graphs.

The strong and list-weak component problems are NP-complete, so their exact
solvers run pivoted recursive clique enumeration with a hard recursion-node
budget: exceeding it raises instead of returning a truncated answer.  The
weak (single-color or resilient) case is polynomial through the locally
chordal enumeration.
"""

from __future__ import annotations

from .chordal import maximal_cliques_locally_chordal
from .errors import BudgetExceededError, GraphValidationError
from .graph import VULNERABLE, ColoredGraph, PairwiseGraph, canonical_cliques
from .vertices import (
    _require_vertex_colored,
    strong_pairwise_graph,
    weak_pairwise_graph,
)

DEFAULT_BUDGET = 10_000_000


def pivot_enumeration(
    h: PairwiseGraph, budget: int = DEFAULT_BUDGET
) -> tuple[list[tuple[int, ...]], int]:
    """All maximal cliques by pivoted branch-and-bound, with node count.

    Pivot: the vertex (from candidates plus excluded) covering the most
    candidates, ties to the smallest id.  Deterministic and exact; intended
    for desk-scale inputs, worst case exponential.
    """
    n = h.n
    nbr = [0] * n
    for u, v in h.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    cliques: list[tuple[int, ...]] = []
    nodes = 0

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(budget)
        if p == 0 and x == 0:
            cliques.append(tuple(sorted(r)))
            return
        pivot = -1
        best = -1
        both = p | x
        while both:
            u = (both & -both).bit_length() - 1
            both &= both - 1
            cover = (nbr[u] & p).bit_count()
            if cover > best:
                best = cover
                pivot = u
        ext = p & ~nbr[pivot]
        while ext:
            v = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            bit = 1 << v
            expand(r + [v], p & nbr[v], x & nbr[v])
            p &= ~bit
            x |= bit
        return

    if n:
        expand([], (1 << n) - 1, 0)
    return canonical_cliques(cliques), nodes


def maximal_cliques_general(
    h: PairwiseGraph, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All maximal cliques of an arbitrary simple graph (exponential path)."""
    cliques, _ = pivot_enumeration(h, budget)
    return cliques


def weak_components(g: ColoredGraph, threads: int = 1) -> list[tuple[int, ...]]:
    """Weakly color-avoiding connected components, in polynomial time.

    Valid for single-color vertices and for resilient multi-color lists; the
    locally chordal structure of the weak pairwise graph is verified at
    runtime, so a violation surfaces as LocalChordalityError instead of a
    wrong answer.  Vulnerable multi-color lists break that structure and are
    rejected; use weak_list_components for them.
    """
    _require_vertex_colored(g)
    if g.multi_color_mode == VULNERABLE and any(
        len(cs) > 1 for cs in g.vertex_colors
    ):
        raise GraphValidationError(
            "vulnerable multi-color lists need the exact list solver; "
            "call weak_list_components"
        )
    return maximal_cliques_locally_chordal(weak_pairwise_graph(g, threads=threads))


def strong_components(
    g: ColoredGraph, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> list[tuple[int, ...]]:
    """Strongly color-avoiding connected components (exact, exponential)."""
    _require_vertex_colored(g)
    cliques, _ = pivot_enumeration(strong_pairwise_graph(g, threads=threads), budget)
    return cliques


def weak_list_components(
    g: ColoredGraph, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> list[tuple[int, ...]]:
    """Weakly color-avoiding components under vulnerable color lists.

    The pairwise builder already handles lists; only the clique extraction
    needs the exponential path here.
    """
    _require_vertex_colored(g)
    cliques, _ = pivot_enumeration(weak_pairwise_graph(g, threads=threads), budget)
    return cliques


def largest_component_size(cliques: list[tuple[int, ...]]) -> int:
    return max((len(c) for c in cliques), default=0)
