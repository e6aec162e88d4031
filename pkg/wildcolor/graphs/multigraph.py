"""
WildColor MultiGraph
====================

Immutable undirected multigraph on vertices 1..n, loops and parallel
edges allowed, plus the surgery used by the recursions: edge deletion,
contraction, vertex-set deletion, links and components.

Every operation returns a new graph whose vertices are again 1..n'
(order-preserving compaction), so equal graphs always have equal edge
tuples.
"""

from collections import Counter
from typing import AbstractSet, Dict, FrozenSet, Iterable, Iterator, List, Tuple, Union

import networkx as nx

from wildcolor.core.exceptions import InputError, UnsupportedFocusError
from wildcolor.models.schemas import FamilyKind, FamilySpec

Edge = Tuple[int, int]
Focus = Union[int, Edge]


def _normalize(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class MultiGraph:
    """Labeled undirected multigraph; the edge multiset is kept sorted"""

    __slots__ = ("_n", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        normalized = []
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {{{u},{v}}} has an endpoint outside 1..{n}")
            normalized.append(_normalize(u, v))
        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(sorted(normalized))
        self._hash = hash((n, self._edges))

    @classmethod
    def empty(cls) -> "MultiGraph":
        return cls(0)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def has_vertex(self, v: int) -> bool:
        return 1 <= v <= self._n

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize(u, v) in self.multiplicities()

    def multiplicities(self) -> Counter:
        return Counter(self._edges)

    def loops(self) -> List[int]:
        return sorted({u for u, v in self._edges if u == v})

    def is_simple(self) -> bool:
        return not self.loops() and len(set(self._edges)) == len(self._edges)

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Distinct vertices sharing an edge with v, v itself excluded"""
        found = set()
        for a, b in self._edges:
            if a == v and b != v:
                found.add(b)
            elif b == v and a != v:
                found.add(a)
        return frozenset(found)

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, set] = {v: set() for v in self.vertices()}
        for a, b in self._edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return {v: frozenset(found) for v, found in adj.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __repr__(self) -> str:
        body = ", ".join(f"{{{u},{v}}}" for u, v in self._edges)
        return f"MultiGraph(n={self._n}, edges=[{body}])"


# =====================
# Families
# =====================

def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> MultiGraph:
    if n == 1:
        return MultiGraph(1, [(1, 1)])
    if n == 2:
        return MultiGraph(2, [(1, 2), (1, 2)])
    return MultiGraph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def sneaky_graph(r: int, s: int, t: int) -> MultiGraph:
    """Path on r+s+t+1 vertices with the chord {r, r+s+1}"""
    size = r + s + t + 1
    return MultiGraph(size, [(i, i + 1) for i in range(1, size)] + [(r, r + s + 1)])


def build_family(spec: FamilySpec) -> MultiGraph:
    if spec.kind == FamilyKind.SNEAKY:
        return sneaky_graph(spec.r, spec.s, spec.t)  # type: ignore[arg-type]
    builders = {
        FamilyKind.PATH: path_graph,
        FamilyKind.CYCLE: cycle_graph,
        FamilyKind.COMPLETE: complete_graph,
    }
    return builders[spec.kind](spec.n)  # type: ignore[arg-type]


# =====================
# Surgery
# =====================

def _require_vertex(graph: MultiGraph, v: int) -> None:
    if not graph.has_vertex(v):
        raise InputError(f"vertex {v} is not in 1..{graph.n}")


def _require_edge(graph: MultiGraph, e: Edge) -> Edge:
    edge = _normalize(*e)
    if edge not in graph.multiplicities():
        raise InputError(f"edge {{{edge[0]},{edge[1]}}} is not in the graph")
    return edge


def _without_one(edges: Tuple[Edge, ...], edge: Edge) -> List[Edge]:
    remaining = list(edges)
    remaining.remove(edge)
    return remaining


def _compact(n: int, edges: Iterable[Edge], removed: AbstractSet[int]) -> MultiGraph:
    """Drop `removed` vertices (edges must avoid them) and relabel 1..n'"""
    mapping: Dict[int, int] = {}
    for v in range(1, n + 1):
        if v not in removed:
            mapping[v] = len(mapping) + 1
    return MultiGraph(len(mapping), [(mapping[u], mapping[v]) for u, v in edges])


def delete_edge(graph: MultiGraph, e: Edge) -> MultiGraph:
    """Remove exactly one copy of e"""
    edge = _require_edge(graph, e)
    return MultiGraph(graph.n, _without_one(graph.edges, edge))


def contract_edge(graph: MultiGraph, e: Edge) -> Tuple[MultiGraph, int]:
    """
    Contract one copy of e and return the graph with the merged vertex.

    The other endpoint is merged into the smaller one, so the merged vertex
    keeps the smaller label. Remaining copies of e become loops. A loop
    contracts to the graph with that loop deleted.
    """
    u, v = _require_edge(graph, e)
    rest = _without_one(graph.edges, (u, v))
    if u == v:
        return MultiGraph(graph.n, rest), u
    merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
    return _compact(graph.n, merged, {v}), u


def delete_vertices(graph: MultiGraph, vertices: Iterable[int]) -> MultiGraph:
    removed = set(vertices)
    for v in removed:
        _require_vertex(graph, v)
    kept = [(a, b) for a, b in graph.edges if a not in removed and b not in removed]
    return _compact(graph.n, kept, removed)


def _edge_focus(graph: MultiGraph, f: Edge) -> Edge:
    edge = _require_edge(graph, f)
    if edge[0] == edge[1]:
        raise UnsupportedFocusError(f"loop {{{edge[0]},{edge[0]}}} has no link or edge degree")
    return edge


def closed_neighborhood(graph: MultiGraph, f: Focus) -> FrozenSet[int]:
    """Vertex set of link(v), or of link(u) ∪ link(v) for an edge {u,v}"""
    if isinstance(f, int):
        _require_vertex(graph, f)
        return graph.neighbors(f) | {f}
    u, v = _edge_focus(graph, f)
    return graph.neighbors(u) | graph.neighbors(v) | {u, v}


def vertex_degree(graph: MultiGraph, v: int) -> int:
    return sum((a == v) + (b == v) for a, b in graph.edges)


def degree(graph: MultiGraph, f: Focus) -> int:
    """Endpoint count at a vertex (loops count twice); deg(u)+deg(v)-2 for an edge"""
    if isinstance(f, int):
        _require_vertex(graph, f)
        return vertex_degree(graph, f)
    u, v = _edge_focus(graph, f)
    return vertex_degree(graph, u) + vertex_degree(graph, v) - 2


def components(graph: MultiGraph) -> List[MultiGraph]:
    """Connected components, ordered by their smallest vertex"""
    parts = []
    for vertex_set in sorted(nx.connected_components(to_networkx(graph)), key=min):
        edges = [(a, b) for a, b in graph.edges if a in vertex_set]
        others = {v for v in graph.vertices() if v not in vertex_set}
        parts.append(_compact(graph.n, edges, others))
    return parts


def relabel(graph: MultiGraph, mapping: Dict[int, int]) -> MultiGraph:
    """Apply a vertex bijection of 1..n"""
    labels = list(graph.vertices())
    if sorted(mapping) != labels or sorted(mapping.values()) != labels:
        raise InputError("relabeling must be a permutation of 1..n")
    return MultiGraph(graph.n, [(mapping[a], mapping[b]) for a, b in graph.edges])


def to_networkx(graph: MultiGraph) -> nx.MultiGraph:
    nx_graph = nx.MultiGraph()
    nx_graph.add_nodes_from(graph.vertices())
    nx_graph.add_edges_from(graph.edges)
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> MultiGraph:
    """Import any networkx graph; nodes are numbered in sorted order"""
    order = {node: i for i, node in enumerate(sorted(nx_graph.nodes()), start=1)}
    return MultiGraph(len(order), [(order[u], order[v]) for u, v in nx_graph.edges()])
