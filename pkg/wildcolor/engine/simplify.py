"""
Chi-preserving reductions.

Properness only asks whether two endpoints share a proper color, so
parallel copies of an edge are redundant, and a vertex carrying a loop
must take a wildcard: chi_G = y * chi_{G - v}.
"""

from typing import Dict, NamedTuple, Tuple

from wildcolor.algebra.bipoly import BiPoly
from wildcolor.graphs.multigraph import MultiGraph, delete_vertices


class Simplified(NamedTuple):
    graph: MultiGraph
    multiplier: BiPoly
    # original label -> label in `graph`, for vertices that survive
    relabel: Dict[int, int]


def simplify_with_relabel(
    graph: MultiGraph,
    drop_parallel_duplicates: bool = True,
    factor_loops: bool = True,
) -> Simplified:
    current = graph
    multiplier = BiPoly.one()
    relabel = {v: v for v in graph.vertices()}

    if factor_loops:
        looped = set(graph.loops())
        if looped:
            multiplier = BiPoly.monomial(1, 0, len(looped))
            kept = [v for v in graph.vertices() if v not in looped]
            relabel = {v: i for i, v in enumerate(kept, start=1)}
            current = delete_vertices(graph, looped)

    if drop_parallel_duplicates:
        distinct = sorted(set(current.edges))
        if len(distinct) != current.num_edges:
            current = MultiGraph(current.n, distinct)

    return Simplified(current, multiplier, relabel)


def simplify(
    graph: MultiGraph,
    drop_parallel_duplicates: bool = True,
    factor_loops: bool = True,
) -> Tuple[MultiGraph, BiPoly]:
    """Simple residual graph and monomial multiplier with chi_G = multiplier * chi_residual"""
    reduced = simplify_with_relabel(graph, drop_parallel_duplicates, factor_loops)
    return reduced.graph, reduced.multiplier
