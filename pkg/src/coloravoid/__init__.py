"""Exact color-avoiding connectivity toolkit.

Edge-colored graphs get polynomial component extraction; vertex-colored
graphs get the strong (exact exponential), weak (polynomial via locally
chordal structure) and list-weak (exact exponential) variants, plus a
definition-literal brute-force oracle and hardness-gadget generators.
"""

from .chordal import (
    EliminationOrder,
    NotChordalEvidence,
    is_locally_chordal,
    is_perfect_elimination_order,
    local_chordality_violation,
    maximal_cliques_chordal,
    maximal_cliques_locally_chordal,
    maximum_cardinality_search,
)
from .cliques import (
    DEFAULT_BUDGET,
    maximal_cliques_general,
    pivot_enumeration,
    strong_components,
    weak_components,
    weak_list_components,
)
from .edges import (
    edge_cac_components,
    edge_surviving_partition,
    is_edge_cac,
    largest_edge_cac_at_least,
)
from .errors import (
    BudgetExceededError,
    CagParseError,
    ColorAvoidError,
    GraphValidationError,
    InvalidEliminationOrderError,
    LocalChordalityError,
)
from .generate import generate_er
from .graph import (
    EDGES,
    RESILIENT,
    VERTICES,
    VULNERABLE,
    ColoredGraph,
    Edge,
    Partition,
    PairwiseGraph,
    canonical_cliques,
)
from .graphio import parse_edge_list, parse_graph, serialize_graph, to_dot
from .oracle import (
    AvoidanceWitness,
    PairRelation,
    WitnessReport,
    extract_witnesses,
    oracle_components,
    oracle_pairwise,
    validate_witness,
)
from .reductions import clique_gadget, clique_gadget_reduced
from .vertices import (
    strong_pairwise_graph,
    strongly_avoiding,
    vertex_surviving_partition,
    weak_pairwise_graph,
    weakly_avoiding,
)

__version__ = "0.1.0"

__all__ = [
    "AvoidanceWitness",
    "BudgetExceededError",
    "CagParseError",
    "ColorAvoidError",
    "ColoredGraph",
    "DEFAULT_BUDGET",
    "EDGES",
    "Edge",
    "EliminationOrder",
    "GraphValidationError",
    "InvalidEliminationOrderError",
    "LocalChordalityError",
    "NotChordalEvidence",
    "PairRelation",
    "Partition",
    "PairwiseGraph",
    "RESILIENT",
    "VERTICES",
    "VULNERABLE",
    "WitnessReport",
    "canonical_cliques",
    "clique_gadget",
    "clique_gadget_reduced",
    "edge_cac_components",
    "edge_surviving_partition",
    "extract_witnesses",
    "generate_er",
    "is_edge_cac",
    "is_locally_chordal",
    "is_perfect_elimination_order",
    "largest_edge_cac_at_least",
    "local_chordality_violation",
    "maximal_cliques_chordal",
    "maximal_cliques_general",
    "maximal_cliques_locally_chordal",
    "maximum_cardinality_search",
    "oracle_components",
    "oracle_pairwise",
    "parse_edge_list",
    "parse_graph",
    "pivot_enumeration",
    "serialize_graph",
    "strong_components",
    "strong_pairwise_graph",
    "strongly_avoiding",
    "to_dot",
    "validate_witness",
    "vertex_surviving_partition",
    "weak_components",
    "weak_list_components",
    "weak_pairwise_graph",
    "weakly_avoiding",
]
