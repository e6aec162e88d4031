"""
WildColor Graphs Module
=======================

Multigraph value type, surgery, families, memo keys and the .mg format.
"""

from wildcolor.graphs.canonical import canonical_key
from wildcolor.graphs.corpus import random_multigraphs, simple_graphs
from wildcolor.graphs.io import parse_graph, read_graph, serialize_graph, write_graph
from wildcolor.graphs.multigraph import (
    Edge,
    Focus,
    MultiGraph,
    build_family,
    closed_neighborhood,
    complete_graph,
    components,
    contract_edge,
    cycle_graph,
    degree,
    delete_edge,
    delete_vertices,
    path_graph,
    relabel,
    sneaky_graph,
    to_networkx,
)

__all__ = [
    "Edge",
    "Focus",
    "MultiGraph",
    "build_family",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "sneaky_graph",
    "delete_edge",
    "contract_edge",
    "delete_vertices",
    "closed_neighborhood",
    "degree",
    "components",
    "relabel",
    "to_networkx",
    "canonical_key",
    "parse_graph",
    "serialize_graph",
    "read_graph",
    "write_graph",
    "simple_graphs",
    "random_multigraphs",
]
