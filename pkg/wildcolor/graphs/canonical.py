"""
Memo keys for multigraphs.

Labeled keys serialize n and the sorted edge multiset. Canonical keys
take the smallest (n, sorted edges) over every relabeling, so isomorphic
graphs share a key; the search is factorial and therefore size-capped.
"""

from itertools import permutations
from typing import Optional, Sequence, Tuple

from wildcolor.core.config import settings
from wildcolor.core.exceptions import CapacityError
from wildcolor.graphs.multigraph import Edge, MultiGraph
from wildcolor.models.schemas import MemoMode


def _encode(prefix: bytes, n: int, edges: Sequence[Edge]) -> bytes:
    body = ";".join(f"{u},{v}" for u, v in edges)
    return prefix + f"{n}|{body}".encode("ascii")


def _minimal_edges(graph: MultiGraph) -> Tuple[Edge, ...]:
    best: Optional[Tuple[Edge, ...]] = None
    vertices = list(graph.vertices())
    for image in permutations(vertices):
        # image[v-1] is the new label of v
        relabeled = tuple(sorted(
            (min(image[u - 1], image[v - 1]), max(image[u - 1], image[v - 1]))
            for u, v in graph.edges
        ))
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def canonical_key(
    graph: MultiGraph,
    mode: MemoMode = MemoMode.LABELED,
    max_vertices: Optional[int] = None,
) -> bytes:
    if mode == MemoMode.LABELED:
        return _encode(b"L", graph.n, graph.edges)

    limit = settings.budget.canonical_max_vertices if max_vertices is None else max_vertices
    if graph.n > limit:
        raise CapacityError(
            f"canonical key needs n <= {limit}, got n={graph.n}",
            n=graph.n,
            limit=limit,
        )
    return _encode(b"C", graph.n, _minimal_edges(graph))
