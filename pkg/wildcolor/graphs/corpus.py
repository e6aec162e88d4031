"""
Test corpora: every small simple graph up to isomorphism, and seeded
random multigraphs with loops and parallel edges.
"""

import random
from typing import List

import networkx as nx

from wildcolor.graphs.multigraph import MultiGraph, from_networkx

# networkx ships the atlas of all graphs on up to 7 nodes
ATLAS_MAX_VERTICES = 7


def simple_graphs(max_vertices: int) -> List[MultiGraph]:
    """One representative per isomorphism class, empty graph included"""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise ValueError(f"the graph atlas stops at {ATLAS_MAX_VERTICES} vertices")
    return [
        from_networkx(g)
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() <= max_vertices
    ]


def random_multigraphs(
    count: int,
    max_vertices: int,
    max_edges: int,
    seed: int,
) -> List[MultiGraph]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        edges = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(m)]
        graphs.append(MultiGraph(n, edges))
    return graphs
