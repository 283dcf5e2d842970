"""Exact parking functions, spanning trees and chip-firing on hypergraphs."""

from .catalog import complete_hypergraph, graph, running_example, single_edge, star_example
from .core import (
    BipartiteIncidence,
    EdgeNode,
    HypergraphError,
    RootedHypergraph,
    SizeGuardError,
    bipartite_incidence,
    degree,
    degree_in_set,
    from_edges,
    load_hypergraph,
    parse_hypergraph,
    serialize_hypergraph,
)
from .counting import (
    acyclic_count_complete_bipartite,
    is_u_parking,
    maximal_u_parking,
    steck_count,
    u_vector_complete,
)
from .digraphs import (
    Cycling,
    Digraph,
    cycling_from_order,
    digraph_from_cycling,
    digraph_parking_enumerate,
    is_eulerian,
    laplacian_determinant,
    reduced_laplacian,
    star_digraph,
    union_over_cyclings,
)
from .firing import fire_set, fire_vertex, is_cancellative, is_superstable, ready_to_fire, ready_to_fire_oracle
from .ideal import cut_ideal_generators, is_standard_monomial, minimal_generators
from .parking import (
    bounded_sets,
    enumerate_acyclic_orientations,
    enumerate_parking,
    is_parking_bruteforce,
    is_parking_burn,
    maximal_parking,
    orientation_to_config,
)
from .trees import (
    BTree,
    TreeClass,
    all_spanning_trees,
    class_canonical_tree,
    hypertree_of,
    parking_to_tree,
    tree_class_of,
    tree_classes,
    tree_to_parking,
)

__version__ = "0.1.0"

__all__ = [
    "BTree",
    "BipartiteIncidence",
    "Cycling",
    "Digraph",
    "EdgeNode",
    "HypergraphError",
    "RootedHypergraph",
    "SizeGuardError",
    "TreeClass",
    "acyclic_count_complete_bipartite",
    "all_spanning_trees",
    "bipartite_incidence",
    "bounded_sets",
    "class_canonical_tree",
    "complete_hypergraph",
    "cut_ideal_generators",
    "cycling_from_order",
    "degree",
    "degree_in_set",
    "digraph_from_cycling",
    "digraph_parking_enumerate",
    "enumerate_acyclic_orientations",
    "enumerate_parking",
    "fire_set",
    "fire_vertex",
    "from_edges",
    "graph",
    "hypertree_of",
    "is_cancellative",
    "is_eulerian",
    "is_parking_bruteforce",
    "is_parking_burn",
    "is_standard_monomial",
    "is_superstable",
    "is_u_parking",
    "laplacian_determinant",
    "load_hypergraph",
    "maximal_parking",
    "maximal_u_parking",
    "minimal_generators",
    "orientation_to_config",
    "parking_to_tree",
    "parse_hypergraph",
    "ready_to_fire",
    "ready_to_fire_oracle",
    "reduced_laplacian",
    "running_example",
    "serialize_hypergraph",
    "single_edge",
    "star_digraph",
    "star_example",
    "steck_count",
    "tree_class_of",
    "tree_classes",
    "tree_to_parking",
    "u_vector_complete",
    "union_over_cyclings",
]
