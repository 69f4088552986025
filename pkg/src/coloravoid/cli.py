"""Command-line front end.

Commands: ``components``, ``pairwise``, ``gen``, ``check``, ``export-dot``.
Reports are JSON (schema 1) with deterministic key order and content; the
only run-dependent value is isolated in the ``timing_ms`` key.  Exit codes:
0 success / yes, 1 no or property violation, 2 invalid input, 3 enumeration
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import cliques, edges, oracle, reductions, vertices
from .chordal import local_chordality_violation
from .errors import BudgetExceededError, ColorAvoidError, LocalChordalityError
from .graph import EDGES, VERTICES, VULNERABLE, ColoredGraph, PairwiseGraph
from .graphio import parse_edge_list, parse_graph, serialize_graph, to_dot
from .generate import generate_er

VARIANT_CHOICES = ("edge", "strong", "weak", "weak-lists")


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _load_graph(path: str, mode: str | None) -> ColoredGraph:
    g = parse_graph(_read_text(path))
    if mode is not None:
        g = g.with_mode(mode)
    return g


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _input_summary(g: ColoredGraph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "k": g.palette_size,
        "target": g.coloring_target,
        "mode": g.multi_color_mode,
    }


def _load_names(path: str | None) -> dict[int, str] | None:
    if path is None:
        return None
    raw = json.loads(_read_text(path))
    return {int(k): str(v) for k, v in raw.items()}


def cmd_components(args) -> int:
    g = _load_graph(args.file, args.mode)
    names = _load_names(args.names)
    t0 = time.perf_counter()
    budget_used = 0
    if args.variant == "edge":
        part = edges.edge_cac_components(g, threads=args.threads)
        comps = part.blocks()
        solver = "refinement"
        per_color = [
            edges.edge_surviving_partition(g, c).num_blocks
            for c in range(g.palette_size)
        ]
    else:
        if args.variant == "weak":
            comps = [list(c) for c in cliques.weak_components(g, threads=args.threads)]
            solver = "locally-chordal"
        else:
            builder = (
                vertices.strong_pairwise_graph
                if args.variant == "strong"
                else vertices.weak_pairwise_graph
            )
            pw = builder(g, threads=args.threads)
            found, budget_used = cliques.pivot_enumeration(pw, args.budget)
            comps = [list(c) for c in found]
            solver = "pivot-enumeration"
        per_color = [
            vertices.vertex_surviving_partition(g, c).num_blocks
            for c in range(g.palette_size)
        ]
    elapsed = (time.perf_counter() - t0) * 1000.0
    largest = max((len(c) for c in comps), default=0)
    report = {
        "schema": 1,
        "input": _input_summary(g),
        "variant": args.variant,
        "solver": solver,
        "components": comps,
        "largest": largest,
        "per_color_blocks": per_color,
        "budget_consumed": budget_used,
        "at_least": None,
        "timing_ms": elapsed,
    }
    exit_code = 0
    if args.at_least is not None:
        if args.at_least < 1:
            raise ValueError("--at-least must be a positive integer")
        satisfied = largest >= args.at_least
        report["at_least"] = {"l": args.at_least, "satisfied": satisfied}
        exit_code = 0 if satisfied else 1
    if names is not None:
        report["components_named"] = [
            [names.get(v, str(v)) for v in c] for c in comps
        ]
    _emit(report)
    return exit_code


def cmd_pairwise(args) -> int:
    g = _load_graph(args.file, args.mode)
    t0 = time.perf_counter()
    result = oracle.extract_witnesses(g, args.u, args.v, args.variant)
    elapsed = (time.perf_counter() - t0) * 1000.0
    if args.json:
        witness_rows = [
            {
                "color": w.color,
                "kind": w.kind,
                "path": list(w.path) if w.path is not None else None,
            }
            for w in result.witnesses
        ]
        _emit(
            {
                "schema": 1,
                "input": _input_summary(g),
                "variant": args.variant,
                "u": args.u,
                "v": args.v,
                "connected": result.ok,
                "connected_in_graph": result.connected_in_graph,
                "failing_color": result.failing_color,
                "witnesses": witness_rows,
                "timing_ms": elapsed,
            }
        )
        return 0
    print(f"pair ({args.u}, {args.v}) variant {args.variant}")
    for w in result.witnesses:
        if w.kind == "path":
            print(f"color {w.color}: path " + "-".join(map(str, w.path)))
        else:
            print(f"color {w.color}: endpoint removed, trivially avoiding")
    if not result.connected_in_graph:
        print("verdict: not connected in the base graph")
    elif result.failing_color is not None:
        print(f"verdict: fails: color {result.failing_color}")
    else:
        print("verdict: connected")
    return 0


def cmd_gen(args) -> int:
    if args.kind == "er":
        g = generate_er(args.n, args.p, args.k, args.target, args.seed)
    else:
        h = parse_edge_list(_read_text(args.source))
        if args.kind == "gadget":
            g = reductions.clique_gadget(h)
        else:
            g = reductions.clique_gadget_reduced(h)
    sys.stdout.write(serialize_graph(g))
    return 0


def _check_local_chordal(args) -> int:
    if args.raw:
        h = parse_edge_list(_read_text(args.file))
        summary = {"n": h.n, "m": h.edge_count, "raw": True}
    else:
        g = _load_graph(args.file, args.mode)
        h = vertices.weak_pairwise_graph(g)
        summary = _input_summary(g)
    t0 = time.perf_counter()
    violation = local_chordality_violation(h)
    elapsed = (time.perf_counter() - t0) * 1000.0
    report = {
        "schema": 1,
        "check": "local-chordal",
        "input": summary,
        "ok": violation is None,
        "certificate": None,
        "timing_ms": elapsed,
    }
    if violation is not None:
        hub, triple = violation
        report["certificate"] = {"hub": hub, "triple": list(triple)}
    _emit(report)
    return 0 if violation is None else 1


def _relation_of(adj: np.ndarray) -> set[tuple[int, int]]:
    n = adj.shape[0]
    return {(u, v) for u in range(n) for v in range(u + 1, n) if adj[u, v]}


def _check_oracle_agree(args) -> int:
    g = _load_graph(args.file, args.mode)
    if g.n > oracle.SUBSET_SCAN_LIMIT:
        raise ValueError(
            f"oracle-agree needs n <= {oracle.SUBSET_SCAN_LIMIT}, got n = {g.n}"
        )
    t0 = time.perf_counter()
    mismatches = []
    checked = []
    if g.coloring_target == EDGES:
        variants = ["edge"]
    elif g.multi_color_mode == VULNERABLE and any(
        len(cs) > 1 for cs in g.vertex_colors
    ):
        variants = ["strong", "weak-lists"]
    else:
        variants = ["strong", "weak"]
    for variant in variants:
        rel = oracle.oracle_pairwise(g, variant)
        if variant == "edge":
            fast_part = edges.edge_cac_components(g)
            fast_pairs = {
                (u, v)
                for u in range(g.n)
                for v in range(u + 1, g.n)
                if fast_part.same_block(u, v)
            }
            slow_comps = oracle.oracle_components(rel, variant)
            agree_comps = fast_part == slow_comps
        else:
            if variant == "strong":
                pw = vertices.strong_pairwise_graph(g)
                fast = cliques.strong_components(g)
            elif variant == "weak":
                pw = vertices.weak_pairwise_graph(g)
                fast = cliques.weak_components(g)
            else:
                pw = vertices.weak_pairwise_graph(g)
                fast = cliques.weak_list_components(g)
            fast_pairs = _relation_of(pw.adj)
            slow_comps = oracle.oracle_components(rel, variant)
            agree_comps = [list(c) for c in fast] == [list(c) for c in slow_comps]
        oracle_pairs = set(rel.pairs())
        checked.append(variant)
        if fast_pairs != oracle_pairs:
            sample = sorted(fast_pairs ^ oracle_pairs)[0]
            mismatches.append(
                {"variant": variant, "what": "pairwise", "pair": list(sample)}
            )
        if not agree_comps:
            mismatches.append({"variant": variant, "what": "components"})
    elapsed = (time.perf_counter() - t0) * 1000.0
    _emit(
        {
            "schema": 1,
            "check": "oracle-agree",
            "input": _input_summary(g),
            "variants": checked,
            "ok": not mismatches,
            "mismatches": mismatches,
            "timing_ms": elapsed,
        }
    )
    return 0 if not mismatches else 1


def cmd_check(args) -> int:
    if args.kind == "local-chordal":
        return _check_local_chordal(args)
    if args.raw:
        raise ValueError("--raw only applies to the local-chordal check")
    return _check_oracle_agree(args)


def cmd_export_dot(args) -> int:
    g = _load_graph(args.file, args.mode)
    sys.stdout.write(to_dot(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coloravoid",
        description="Color-avoiding connectivity solvers on colored graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--mode", choices=("vulnerable", "resilient"), default=None,
                       help="override the multi-color vertex semantics")

    p = sub.add_parser("components", help="compute color-avoiding components")
    p.add_argument("file")
    p.add_argument("--variant", choices=VARIANT_CHOICES, required=True)
    p.add_argument("--at-least", type=int, default=None, metavar="L",
                   help="decision form: exit 0 if a component has size >= L, else 1")
    p.add_argument("--budget", type=int, default=cliques.DEFAULT_BUDGET,
                   help="recursion-node budget for the exponential solvers")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--names", default=None,
                   help="JSON file mapping vertex ids to display labels")
    add_common(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("pairwise", help="per-color verdicts and witness paths")
    p.add_argument("file")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--variant", choices=VARIANT_CHOICES, required=True)
    p.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_pairwise)

    p = sub.add_parser("gen", help="generate instances as CAG text")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    q = gen_sub.add_parser("er", help="Erdős–Rényi with uniform colors")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--target", choices=(EDGES, VERTICES), default=VERTICES)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_gen)
    for kind in ("gadget", "gadget-reduced"):
        q = gen_sub.add_parser(kind, help="clique-reduction instance from an edge list")
        q.add_argument("--from", dest="source", required=True,
                       help="plain edge-list file (u v per line)")
        q.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify structural properties")
    p.add_argument("file")
    p.add_argument("--kind", choices=("local-chordal", "oracle-agree"),
                   required=True)
    p.add_argument("--raw", action="store_true",
                   help="treat the file as a plain edge list naming the "
                        "pairwise graph itself (local-chordal only)")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-dot", help="GraphViz DOT export")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LocalChordalityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ColorAvoidError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
