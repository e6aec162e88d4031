"""
WildColor Chi Engine
====================

Computes chi_G(x, y) by memoized deletion-contraction:

    chi_G = chi_{G-e} - chi_{G/e} + y * chi_{(G/e)-v}

where v is the vertex e contracts to. Edgeless graphs on n vertices give
(x+y)^n (n = 0 gives 1) and chi is multiplicative over components.
"""

from typing import Dict, Optional

from wildcolor.algebra.bipoly import BiPoly, power_xy
from wildcolor.core.logging import get_logger
from wildcolor.engine.simplify import simplify
from wildcolor.graphs.canonical import canonical_key
from wildcolor.graphs.multigraph import (
    Edge,
    MultiGraph,
    components,
    contract_edge,
    delete_edge,
    delete_vertices,
    vertex_degree,
)
from wildcolor.models.schemas import EdgeStrategy, EngineConfig, MemoMode

logger = get_logger(__name__)


class ChiEngine:
    """
    Deletion-contraction evaluator with a memo table.

    The memo maps graph keys to polynomials. Inserts go through
    dict.setdefault, so concurrent workers sharing one engine only ever
    store equal values under a key.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig.from_settings()
        self.logger = get_logger("engine.chi")
        self._memo: Dict[bytes, BiPoly] = {}

        # Metrics
        self.hits = 0
        self.misses = 0
        self.max_depth = 0

    def compute(self, graph: MultiGraph) -> BiPoly:
        result = self._chi(graph, 0)
        self.logger.debug(
            "Computed chi",
            extra={
                "n": graph.n,
                "m": graph.num_edges,
                "memo_size": len(self._memo),
                "hits": self.hits,
                "misses": self.misses,
                "max_depth": self.max_depth,
            },
        )
        return result

    def expand_on_edge(self, graph: MultiGraph, edge: Edge) -> BiPoly:
        """Apply the edge recursion at `edge` first, then recurse as usual"""
        return self._delete_contract(graph, edge, 0)

    def clear(self) -> None:
        self._memo.clear()
        self.hits = self.misses = self.max_depth = 0

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def key(self, graph: MultiGraph) -> bytes:
        cap = self.config.canonical_max_vertices
        if self.config.memo_mode == MemoMode.CANONICAL and graph.n <= cap:
            return canonical_key(graph, MemoMode.CANONICAL, max_vertices=cap)
        return canonical_key(graph, MemoMode.LABELED)

    def choose_edge(self, graph: MultiGraph) -> Edge:
        if self.config.edge_strategy == EdgeStrategy.FIRST_EDGE:
            return graph.edges[0]

        for u, v in graph.edges:
            if u == v:
                return (u, v)
        parallel = sorted(e for e, count in graph.multiplicities().items() if count > 1)
        if parallel:
            return parallel[0]
        degrees = {v: vertex_degree(graph, v) for v in graph.vertices()}
        return min(graph.edges, key=lambda e: (-(degrees[e[0]] + degrees[e[1]]), e))

    def _chi(self, graph: MultiGraph, depth: int) -> BiPoly:
        self.max_depth = max(self.max_depth, depth)
        key = self.key(graph)
        cached = self._memo.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        return self._memo.setdefault(key, self._expand(graph, depth))

    def _expand(self, graph: MultiGraph, depth: int) -> BiPoly:
        if graph.num_edges == 0:
            return power_xy(graph.n)

        reduced, multiplier = simplify(
            graph,
            drop_parallel_duplicates=self.config.drop_parallel_duplicates,
            factor_loops=self.config.factor_loops,
        )
        if reduced != graph:
            return multiplier * self._chi(reduced, depth + 1)

        parts = components(graph)
        if len(parts) > 1:
            product = BiPoly.one()
            for part in parts:
                product = product * self._chi(part, depth + 1)
            return product

        return self._delete_contract(graph, self.choose_edge(graph), depth)

    def _delete_contract(self, graph: MultiGraph, edge: Edge, depth: int) -> BiPoly:
        deleted = delete_edge(graph, edge)
        contracted, merged = contract_edge(graph, edge)
        remainder = delete_vertices(contracted, [merged])
        return (
            self._chi(deleted, depth + 1)
            - self._chi(contracted, depth + 1)
            + self._chi(remainder, depth + 1).scale_y(1)
        )


def compute_chi(graph: MultiGraph, cfg: Optional[EngineConfig] = None) -> BiPoly:
    return ChiEngine(cfg).compute(graph)


def chromatic_polynomial(graph: MultiGraph, engine: Optional[ChiEngine] = None) -> BiPoly:
    """chi_G(x, 0): the classical chromatic polynomial"""
    return (engine or ChiEngine()).compute(graph).substitute(y=0)
