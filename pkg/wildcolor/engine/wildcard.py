"""
The k = 1 recursions for chi_G(1, y), removing vertices instead of edges:

    vertex v:  chi_G = y * chi_{G-v} + y^deg(v) * chi_{G - link(v)}
    edge e:    chi_G = chi_{G-e} - y^w * chi_{G - link(e)}

Both assume a simple graph, so the input is simplified first. For the
edge rule w is the number of vertices of link(e) besides the endpoints;
that is deg(u)+deg(v)-2 when e lies in no triangle. Every wildcard
neighbor is counted once, which the literal degree sum overcounts when
u and v share a neighbor.
"""

from typing import Optional, Union

from wildcolor.algebra.bipoly import BiPoly
from wildcolor.core.exceptions import UnsupportedFocusError
from wildcolor.engine.chi import ChiEngine
from wildcolor.engine.simplify import simplify_with_relabel
from wildcolor.graphs.multigraph import (
    Edge,
    Focus,
    MultiGraph,
    closed_neighborhood,
    degree,
    delete_edge,
    delete_vertices,
)
from wildcolor.models.schemas import WildcardMode


def _vertex_focus(f: Focus, relabel: dict) -> int:
    if not isinstance(f, int):
        raise UnsupportedFocusError("vertex mode needs a vertex focus")
    if f not in relabel:
        raise UnsupportedFocusError(f"vertex {f} carries a loop or is not in the graph")
    return relabel[f]


def _edge_focus(f: Focus, relabel: dict) -> Edge:
    if isinstance(f, int):
        raise UnsupportedFocusError("edge mode needs an edge focus")
    u, v = f
    if u == v:
        raise UnsupportedFocusError(f"loop {{{u},{v}}} is not a valid edge focus")
    if u not in relabel or v not in relabel:
        raise UnsupportedFocusError(f"edge {{{u},{v}}} touches a looped vertex")
    return (relabel[u], relabel[v])


def chi_wildcard(
    graph: MultiGraph,
    f: Focus,
    mode: Union[WildcardMode, str],
    engine: Optional[ChiEngine] = None,
) -> BiPoly:
    """chi_G(1, y) through one application of the chosen vertex/edge rule"""
    mode = WildcardMode(mode)
    engine = engine or ChiEngine()
    simple, multiplier, relabel = simplify_with_relabel(graph)

    def at_one(part: MultiGraph) -> BiPoly:
        return engine.compute(part).substitute(x=1)

    if mode == WildcardMode.VERTEX:
        v = _vertex_focus(f, relabel)
        result = (
            at_one(delete_vertices(simple, [v])).scale_y(1)
            + at_one(delete_vertices(simple, closed_neighborhood(simple, v))).scale_y(
                degree(simple, v)
            )
        )
    else:
        e = _edge_focus(f, relabel)
        link = closed_neighborhood(simple, e)
        result = (
            at_one(delete_edge(simple, e))
            - at_one(delete_vertices(simple, link)).scale_y(len(link) - 2)
        )
    return multiplier * result
