"""Text formats: the CAG graph format, plain edge lists, DOT export.

CAG is a line-oriented format with ``#`` comments::

    cag <vertices|edges> <n> <k> [vulnerable|resilient]
    v <id> <color>*          # vertex mode only; omitted vertices have no colors
    e <u> <v> [<color>+]     # colors required in edge mode, forbidden in vertex mode

``n`` is the vertex count (ids are dense ``0..n-1``) and ``k`` the declared
palette size; color ids must be ``< k``.  The optional mode token selects the
multi-color vertex semantics and is only legal in vertex mode.  Parallel
edge lines are kept as separate records, in file order.
"""

from __future__ import annotations

import re

from .errors import CagParseError
from .graph import (
    COLORING_TARGETS,
    EDGES,
    MULTI_COLOR_MODES,
    VERTICES,
    VULNERABLE,
    ColoredGraph,
    Edge,
    PairwiseGraph,
)

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    """Tokens of one line with 1-based column positions, comments stripped."""
    hash_pos = line.find("#")
    if hash_pos != -1:
        line = line[:hash_pos]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int_token(tok: str, col: int, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise CagParseError(f"expected {what}, got {tok!r}", lineno, col) from None


def parse_graph(text: str) -> ColoredGraph:
    """Parse a CAG character stream into a ColoredGraph.

    Raises CagParseError with line/column on any syntax or semantic error
    (unknown directive, id or color out of range, self-loop, color list
    present where the mode forbids it or missing where it is required).
    """
    lines = text.splitlines()
    header = None
    header_line = 0
    body_start = 0
    for i, line in enumerate(lines):
        toks = _tokens(line)
        if not toks:
            continue
        header = toks
        header_line = i + 1
        body_start = i + 1
        break
    if header is None:
        raise CagParseError("missing 'cag' header", max(len(lines), 1))
    if header[0][0] != "cag":
        raise CagParseError(
            f"expected 'cag' header, got {header[0][0]!r}", header_line, header[0][1]
        )
    if len(header) not in (4, 5):
        raise CagParseError(
            "header must be 'cag <vertices|edges> <n> <k> [vulnerable|resilient]'",
            header_line,
            header[0][1],
        )
    target = header[1][0]
    if target not in COLORING_TARGETS:
        raise CagParseError(
            f"coloring target must be one of {COLORING_TARGETS}, got {target!r}",
            header_line,
            header[1][1],
        )
    n = _int_token(header[2][0], header[2][1], header_line, "vertex count")
    k = _int_token(header[3][0], header[3][1], header_line, "palette size")
    if n < 0:
        raise CagParseError("vertex count must be nonnegative", header_line, header[2][1])
    if k < 0:
        raise CagParseError("palette size must be nonnegative", header_line, header[3][1])
    mode = VULNERABLE
    if len(header) == 5:
        tok, col = header[4]
        if target != VERTICES:
            raise CagParseError(
                "multi-color mode is only valid with vertex coloring", header_line, col
            )
        if tok not in MULTI_COLOR_MODES:
            raise CagParseError(
                f"mode must be one of {MULTI_COLOR_MODES}, got {tok!r}", header_line, col
            )
        mode = tok

    vertex_colors: list[set[int]] = [set() for _ in range(n)]
    seen_vertex_line = [False] * n
    edges: list[Edge] = []

    def check_vertex(tok: str, col: int, lineno: int) -> int:
        v = _int_token(tok, col, lineno, "a vertex id")
        if not 0 <= v < n:
            raise CagParseError(f"vertex id {v} out of range (n={n})", lineno, col)
        return v

    def check_color(tok: str, col: int, lineno: int) -> int:
        c = _int_token(tok, col, lineno, "a color id")
        if not 0 <= c < k:
            raise CagParseError(
                f"color id {c} out of range (palette size {k})", lineno, col
            )
        return c

    for i in range(body_start, len(lines)):
        lineno = i + 1
        toks = _tokens(lines[i])
        if not toks:
            continue
        tag, tag_col = toks[0]
        if tag == "v":
            if target != VERTICES:
                raise CagParseError(
                    "vertex color line in an edge-colored file", lineno, tag_col
                )
            if len(toks) < 2:
                raise CagParseError("'v' line needs a vertex id", lineno, tag_col)
            v = check_vertex(toks[1][0], toks[1][1], lineno)
            if seen_vertex_line[v]:
                raise CagParseError(f"duplicate 'v' line for vertex {v}", lineno, toks[1][1])
            seen_vertex_line[v] = True
            for tok, col in toks[2:]:
                vertex_colors[v].add(check_color(tok, col, lineno))
        elif tag == "e":
            if len(toks) < 3:
                raise CagParseError("'e' line needs two endpoints", lineno, tag_col)
            u = check_vertex(toks[1][0], toks[1][1], lineno)
            v = check_vertex(toks[2][0], toks[2][1], lineno)
            if u == v:
                raise CagParseError(f"self-loop at vertex {u}", lineno, toks[2][1])
            colors = frozenset(check_color(tok, col, lineno) for tok, col in toks[3:])
            if target == EDGES and not colors:
                raise CagParseError(
                    "edge line needs at least one color in edge mode", lineno, tag_col
                )
            if target == VERTICES and colors:
                raise CagParseError(
                    "edge colors are not allowed in vertex mode", lineno, toks[3][1]
                )
            edges.append(Edge(u, v, colors))
        elif tag == "cag":
            raise CagParseError("duplicate 'cag' header", lineno, tag_col)
        else:
            raise CagParseError(f"unknown directive {tag!r}", lineno, tag_col)

    return ColoredGraph(
        n,
        k,
        target,
        edges,
        vertex_colors=vertex_colors,
        multi_color_mode=mode,
    )


def serialize_graph(g: ColoredGraph) -> str:
    """Serialize to CAG text; ``parse_graph(serialize_graph(g)) == g``."""
    out = [f"cag {g.coloring_target} {g.n} {g.palette_size}"]
    if g.coloring_target == VERTICES:
        out[0] += f" {g.multi_color_mode}"
        for v, colors in enumerate(g.vertex_colors):
            if colors:
                out.append(f"v {v} " + " ".join(str(c) for c in sorted(colors)))
    for e in g.edges:
        if e.colors:
            out.append(f"e {e.u} {e.v} " + " ".join(str(c) for c in sorted(e.colors)))
        else:
            out.append(f"e {e.u} {e.v}")
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> PairwiseGraph:
    """Parse a plain ``u v`` per-line edge list into a PairwiseGraph.

    The vertex count is one more than the largest id seen.  ``#`` comments
    and blank lines are allowed.
    """
    pairs: list[tuple[int, int]] = []
    top = -1
    for i, line in enumerate(text.splitlines()):
        lineno = i + 1
        toks = _tokens(line)
        if not toks:
            continue
        if len(toks) != 2:
            raise CagParseError("expected 'u v' per line", lineno, toks[0][1])
        u = _int_token(toks[0][0], toks[0][1], lineno, "a vertex id")
        v = _int_token(toks[1][0], toks[1][1], lineno, "a vertex id")
        if u < 0 or v < 0:
            raise CagParseError("vertex ids must be nonnegative", lineno, toks[0][1])
        if u == v:
            raise CagParseError(f"self-loop at vertex {u}", lineno, toks[0][1])
        top = max(top, u, v)
        pairs.append((u, v))
    return PairwiseGraph.from_edges(top + 1, pairs)


# GraphViz color names for small palettes, in the order the figures of this
# problem family conventionally use them.
DOT_PALETTE = (
    "red",
    "blue",
    "green",
    "orange",
    "violet",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "gray",
)


def _dot_color(colors: frozenset[int], k: int) -> str:
    if not colors or k > len(DOT_PALETTE):
        return ""
    return ":".join(DOT_PALETTE[c] for c in sorted(colors))


def to_dot(g: ColoredGraph) -> str:
    """Render as GraphViz DOT with colors as attributes; deterministic."""
    lines = ["graph cag {"]
    for v in range(g.n):
        colors = g.vertex_colors[v]
        attrs = [f'label="{v}"']
        name = _dot_color(colors, g.palette_size)
        if name:
            attrs.append(f'color="{name}"')
        if colors:
            attrs.append('comment="colors ' + " ".join(map(str, sorted(colors))) + '"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for e in g.edges:
        attrs = []
        if e.colors:
            attrs.append('label="' + " ".join(map(str, sorted(e.colors))) + '"')
            name = _dot_color(e.colors, g.palette_size)
            if name:
                attrs.append(f'color="{name}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {e.u} -- {e.v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
