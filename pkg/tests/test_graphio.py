import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coloravoid import (
    CagParseError,
    ColoredGraph,
    parse_edge_list,
    parse_graph,
    serialize_graph,
    to_dot,
)
from helpers import load_cag, rand_edge_graph, rand_vertex_graph


def test_parse_vertex_mode_path():
    g = parse_graph("cag vertices 3 2\nv 0 0\nv 1 1\nv 2 0\ne 0 1\ne 1 2\n")
    assert g.n == 3 and g.palette_size == 2
    assert [set(c) for c in g.vertex_colors] == [{0}, {1}, {0}]
    assert [(e.u, e.v) for e in g.edges] == [(0, 1), (1, 2)]


def test_parse_edge_mode_lists():
    g = parse_graph("cag edges 3 2\ne 0 1 0\ne 1 2 0 1\n")
    assert [set(e.colors) for e in g.edges] == [{0}, {0, 1}]


def test_parse_self_loop_reports_position():
    with pytest.raises(CagParseError) as exc:
        parse_graph("cag vertices 2 1\ne 0 0 \n")
    assert "self-loop" in str(exc.value)
    assert exc.value.line == 2


def test_parse_errors_carry_line_and_column():
    with pytest.raises(CagParseError) as exc:
        parse_graph("cag edges 2 2\ne 0 1 5\n")
    assert exc.value.line == 2
    assert exc.value.column == 7
    with pytest.raises(CagParseError, match="vertex id 9"):
        parse_graph("cag edges 2 2\ne 0 9 1\n")
    with pytest.raises(CagParseError, match="unknown directive"):
        parse_graph("cag edges 2 2\nq 0 1\n")
    with pytest.raises(CagParseError, match="header"):
        parse_graph("e 0 1\n")
    with pytest.raises(CagParseError, match="duplicate 'cag'"):
        parse_graph("cag edges 2 1\ncag edges 2 1\n")


def test_parse_mode_mismatches():
    with pytest.raises(CagParseError, match="edge-colored"):
        parse_graph("cag edges 2 1\nv 0 0\ne 0 1 0\n")
    with pytest.raises(CagParseError, match="at least one color"):
        parse_graph("cag edges 2 1\ne 0 1\n")
    with pytest.raises(CagParseError, match="not allowed in vertex mode"):
        parse_graph("cag vertices 2 1\nv 0 0\nv 1 0\ne 0 1 0\n")
    with pytest.raises(CagParseError, match="only valid with vertex coloring"):
        parse_graph("cag edges 2 1 resilient\ne 0 1 0\n")


def test_parse_comments_and_blank_lines():
    g = parse_graph("# leading comment\n\ncag edges 2 1  # trailing\ne 0 1 0\n")
    assert g.m == 1


def test_parse_duplicate_vertex_line_rejected():
    with pytest.raises(CagParseError, match="duplicate 'v'"):
        parse_graph("cag vertices 2 1\nv 0 0\nv 0 0\n")


def test_parse_mode_token():
    g = parse_graph("cag vertices 2 2 resilient\nv 0 0 1\nv 1 0\ne 0 1\n")
    assert g.multi_color_mode == "resilient"


def test_serialize_empty_graph_is_header_only():
    text = serialize_graph(ColoredGraph(0, 1, "edges"))
    assert text == "cag edges 0 1\n"


def test_serialize_preserves_parallel_edges_in_order():
    g = ColoredGraph(2, 2, "edges", [(0, 1, {1}), (0, 1, {0})])
    again = parse_graph(serialize_graph(g))
    assert again == g
    assert [set(e.colors) for e in again.edges] == [{1}, {0}]


def test_round_trip_fixture_graphs():
    for name in (
        "triangle.cag",
        "parallel_path.cag",
        "diamond_lists.cag",
        "bicolor_path.cag",
        "gprime_edges.cag",
        "gprime_weak.cag",
        "gadget_p4.cag",
        "empty.cag",
    ):
        g = load_cag(name)
        assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_round_trip_random_graphs(data):
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    n = data.draw(st.integers(0, 12))
    k = data.draw(st.integers(1, 5))
    if data.draw(st.booleans()):
        g = rand_edge_graph(rng, n, k, 0.5, lists=True, parallel=True)
    else:
        mode = data.draw(st.sampled_from(["vulnerable", "resilient"]))
        g = rand_vertex_graph(rng, n, k, 0.5, lists=True, mode=mode)
    assert parse_graph(serialize_graph(g)) == g


def test_parse_edge_list():
    h = parse_edge_list("0 1\n# comment\n2 1\n")
    assert h.n == 3
    assert h.edges() == [(0, 1), (1, 2)]
    with pytest.raises(CagParseError, match="self-loop"):
        parse_edge_list("1 1\n")
    with pytest.raises(CagParseError, match="expected 'u v'"):
        parse_edge_list("1 2 3\n")


def test_dot_triangle_counts():
    g = load_cag("triangle.cag")
    dot = to_dot(g)
    lines = dot.splitlines()
    assert sum(1 for l in lines if "--" in l) == 3
    assert sum(1 for l in lines if "label" in l and "--" not in l) == 3
    assert dot.startswith("graph cag {")


def test_dot_vertex_colors_rendered():
    g = load_cag("bicolor_path.cag")
    dot = to_dot(g)
    assert 'color="red"' in dot and 'color="blue"' in dot


def test_dot_edge_list_labels():
    g = load_cag("diamond_lists.cag")
    dot = to_dot(g)
    assert 'label="0 1"' in dot  # red+blue list on the first edge
    assert 'color="red:blue"' in dot
    assert to_dot(g) == dot  # deterministic
