import numpy as np
import pytest

from coloravoid import (
    ColoredGraph,
    Edge,
    GraphValidationError,
    edge_cac_components,
    edge_surviving_partition,
    is_edge_cac,
    largest_edge_cac_at_least,
    oracle_pairwise,
)
from helpers import load_cag, rand_edge_graph


def test_surviving_partition_blue_on_diamond_lists():
    g = load_cag("diamond_lists.cag")
    assert edge_surviving_partition(g, 1).blocks() == [[0], [1, 2, 3]]


def test_surviving_partition_unused_color_is_plain_components():
    g = ColoredGraph(4, 3, "edges", [(0, 1, {0}), (2, 3, {1})])
    assert edge_surviving_partition(g, 2).blocks() == [[0, 1], [2, 3]]


def test_surviving_partition_red_on_parallel_path():
    g = load_cag("parallel_path.cag")
    assert edge_surviving_partition(g, 0).blocks() == [[0, 1], [2]]


def test_is_edge_cac_parallel_path():
    g = load_cag("parallel_path.cag")
    assert is_edge_cac(g, 0, 1)
    assert not is_edge_cac(g, 1, 2)
    assert not is_edge_cac(g, 0, 2)


def test_is_edge_cac_diamond_lists():
    g = load_cag("diamond_lists.cag")
    assert is_edge_cac(g, 1, 3)
    assert not is_edge_cac(g, 0, 1)


def test_is_edge_cac_triangle_follows_definition():
    # with blue on 0-1 and 1-2 and red on 0-2, removing blue isolates 1,
    # so the only avoiding pair is (0, 2)
    g = load_cag("triangle.cag")
    assert is_edge_cac(g, 0, 2)
    assert not is_edge_cac(g, 0, 1)
    assert not is_edge_cac(g, 1, 2)
    assert is_edge_cac(g, 1, 1)  # reflexive by convention


def test_is_edge_cac_validates_vertices():
    g = load_cag("triangle.cag")
    with pytest.raises(GraphValidationError):
        is_edge_cac(g, 0, 9)


def test_components_gprime_edges_figure():
    g = load_cag("gprime_edges.cag")
    assert edge_cac_components(g).blocks() == [[0, 1, 2], [3, 4], [5]]


def test_components_monochromatic_all_singletons():
    g = ColoredGraph(4, 1, "edges", [(0, 1, {0}), (1, 2, {0}), (2, 3, {0})])
    assert edge_cac_components(g).blocks() == [[0], [1], [2], [3]]


def test_components_match_oracle_on_random_graphs():
    rng = np.random.default_rng(1234)
    for _ in range(60):
        n = int(rng.integers(1, 11))
        k = int(rng.integers(1, 5))
        g = rand_edge_graph(rng, n, k, float(rng.choice([0.2, 0.5, 0.8])), lists=True)
        rel = oracle_pairwise(g, "edge")
        part = edge_cac_components(g)
        for u in range(n):
            for v in range(u + 1, n):
                assert rel.related[u, v] == part.same_block(u, v)


def test_isolated_vertices_are_singletons():
    g = ColoredGraph(3, 2, "edges", [(0, 1, {0})])
    assert edge_cac_components(g).blocks() == [[0], [1], [2]]


def test_parallel_edge_of_new_color_merges_endpoints():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n, k = 6, 3
        g = rand_edge_graph(rng, n, k, 0.4)
        before = edge_cac_components(g)
        u, v = 0, 1
        extra = [Edge(u, v, frozenset({0})), Edge(u, v, frozenset({1}))]
        g2 = ColoredGraph(n, k, "edges", list(g.edges) + extra)
        after = edge_cac_components(g2)
        assert after.same_block(u, v)
        # adding edges never shrinks a component
        for a in range(n):
            for b in range(a + 1, n):
                if before.same_block(a, b):
                    assert after.same_block(a, b)


def test_deleting_an_edge_never_enlarges_components():
    rng = np.random.default_rng(6)
    for _ in range(30):
        g = rand_edge_graph(rng, 7, 2, 0.5)
        if not g.m:
            continue
        part = edge_cac_components(g)
        drop = int(rng.integers(0, g.m))
        g2 = ColoredGraph(
            g.n, g.palette_size, "edges",
            [e for i, e in enumerate(g.edges) if i != drop],
        )
        part2 = edge_cac_components(g2)
        for a in range(g.n):
            for b in range(a + 1, g.n):
                if part2.same_block(a, b):
                    assert part.same_block(a, b)


def test_relation_is_equivalence_on_random_graphs():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = rand_edge_graph(rng, 8, 3, 0.5, lists=True)
        rel = oracle_pairwise(g, "edge")
        assert rel.is_transitive()
        assert np.array_equal(rel.related, rel.related.T)


def test_largest_at_least_thresholds():
    g = load_cag("gprime_edges.cag")
    assert largest_edge_cac_at_least(g, 3)
    assert not largest_edge_cac_at_least(g, 4)
    assert largest_edge_cac_at_least(g, 1)
    mono = ColoredGraph(2, 1, "edges", [(0, 1, {0})])
    assert not largest_edge_cac_at_least(mono, 2)
    with pytest.raises(ValueError):
        largest_edge_cac_at_least(g, 0)


def test_coloring_target_mismatch():
    g = load_cag("bicolor_path.cag")
    with pytest.raises(GraphValidationError, match="edge-colored"):
        edge_cac_components(g)
    with pytest.raises(GraphValidationError, match="edge-colored"):
        edge_surviving_partition(g, 0)


def test_threads_do_not_change_results():
    rng = np.random.default_rng(8)
    g = rand_edge_graph(rng, 40, 4, 0.2, lists=True)
    assert edge_cac_components(g, threads=4) == edge_cac_components(g)
