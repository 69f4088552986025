import numpy as np
import pytest

from coloravoid import (
    ColoredGraph,
    Edge,
    GraphValidationError,
    Partition,
    PairwiseGraph,
    canonical_cliques,
)
from coloravoid.graph import canonicalize_labels


def test_edge_graph_invariants():
    g = ColoredGraph(3, 2, "edges", [(0, 1, {0}), (1, 2, {1})])
    assert g.m == 2
    assert g.edges[0] == Edge(0, 1, frozenset({0}))


def test_self_loop_rejected():
    with pytest.raises(GraphValidationError, match="self-loop"):
        ColoredGraph(2, 1, "edges", [(0, 0, {0})])


def test_color_out_of_range_rejected():
    with pytest.raises(GraphValidationError, match="out of range"):
        ColoredGraph(2, 1, "edges", [(0, 1, {1})])
    with pytest.raises(GraphValidationError, match="out of range"):
        ColoredGraph(2, 1, "vertices", [(0, 1, ())], vertex_colors=[{0}, {3}])


def test_endpoint_out_of_range_rejected():
    with pytest.raises(GraphValidationError, match="endpoint"):
        ColoredGraph(2, 1, "edges", [(0, 5, {0})])


def test_target_color_placement_enforced():
    with pytest.raises(GraphValidationError, match="empty"):
        ColoredGraph(2, 1, "edges", [(0, 1, ())])
    with pytest.raises(GraphValidationError, match="vertex-colored"):
        ColoredGraph(2, 1, "vertices", [(0, 1, {0})], vertex_colors=[{0}, {0}])
    with pytest.raises(GraphValidationError, match="edge-colored"):
        ColoredGraph(2, 1, "edges", [(0, 1, {0})], vertex_colors=[{0}, set()])


def test_empty_vertex_lists_allowed_in_vertex_mode():
    g = ColoredGraph(2, 1, "vertices", [(0, 1, ())], vertex_colors=[set(), {0}])
    assert g.vertex_colors[0] == frozenset()


def test_parallel_edges_kept_separate():
    g = ColoredGraph(2, 2, "edges", [(0, 1, {0}), (0, 1, {1})])
    assert g.m == 2


def test_removal_mask_modes():
    g = ColoredGraph(
        3,
        2,
        "vertices",
        [],
        vertex_colors=[{0}, {0, 1}, set()],
    )
    assert list(g.removal_mask(0)) == [True, True, False]
    r = g.with_mode("resilient")
    assert list(r.removal_mask(0)) == [True, False, False]
    assert list(r.removal_mask(1)) == [False, False, False]


def test_partition_canonical_blocks():
    part = canonicalize_labels(np.array([7, 7, 3, 3, 9]))
    assert part.blocks() == [[0, 1], [2, 3], [4]]
    assert part.block_of(1) == 0
    assert part.same_block(2, 3)
    assert not part.same_block(0, 4)
    assert part.largest_block_size() == 2
    assert part.num_blocks == 3


def test_partition_domain_restriction():
    mask = np.array([True, False, True, True])
    part = canonicalize_labels(np.array([1, 1, 1, 2]), mask)
    assert list(part.domain) == [0, 2, 3]
    assert part.same_block(0, 2)
    assert not part.same_block(0, 1)
    assert 1 not in part
    with pytest.raises(KeyError):
        part.block_of(1)


def test_pairwise_graph_validation():
    with pytest.raises(GraphValidationError):
        PairwiseGraph(np.array([[True]]))
    adj = np.zeros((2, 2), dtype=bool)
    adj[0, 1] = True
    with pytest.raises(GraphValidationError, match="symmetric"):
        PairwiseGraph(adj)
    h = PairwiseGraph.from_edges(3, [(0, 1)])
    assert h.has_edge(1, 0)
    assert h.edges() == [(0, 1)]
    assert h.edge_count == 1


def test_pairwise_csr_sorted():
    h = PairwiseGraph.from_edges(4, [(2, 0), (0, 1), (3, 0)])
    indptr, indices = h.csr()
    assert list(indptr) == [0, 3, 4, 5, 6]
    assert list(indices) == [1, 2, 3, 0, 0, 0]


def test_canonical_cliques_dedup_and_order():
    assert canonical_cliques([[2, 1], (1, 2), [0]]) == [(0,), (1, 2)]
