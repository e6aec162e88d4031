"""
WildColor Counting Oracles
==========================

Two counts of proper (k, l)-colorings that share no code with the
deletion-contraction engine:

- brute force over all (k+l)^n assignments (vectorized with numpy);
- subset expansion: sum over wildcard sets W of l^|W| times the number
  of proper k-colorings of G - W, with the classical counts obtained by
  a subset DP over independent sets.

Colors are indices 0..k+l-1; indices below k are proper colors, the rest
are wildcards.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from wildcolor.algebra.bipoly import BiPoly
from wildcolor.core.config import BudgetSettings, settings
from wildcolor.core.exceptions import CapacityError, InputError
from wildcolor.graphs.multigraph import MultiGraph
from wildcolor.models.schemas import ColoringParams

ColoringAssignment = Sequence[int]


def is_proper(graph: MultiGraph, phi: ColoringAssignment, params: ColoringParams) -> bool:
    """No edge (loops included) joins two equal proper colors"""
    if len(phi) != graph.n:
        raise InputError(f"assignment covers {len(phi)} vertices, graph has {graph.n}")
    if any(not 0 <= color < params.colors for color in phi):
        raise InputError(f"colors must lie in 0..{params.colors - 1}")
    return not any(
        phi[u - 1] == phi[v - 1] and phi[u - 1] < params.k for u, v in graph.edges
    )


def count_bruteforce(
    graph: MultiGraph,
    params: ColoringParams,
    budget: Optional[BudgetSettings] = None,
) -> int:
    budget = budget or settings.budget
    n, colors = graph.n, params.colors
    if n > budget.bruteforce_max_vertices or colors > budget.bruteforce_max_colors:
        raise CapacityError(
            f"brute force limited to n <= {budget.bruteforce_max_vertices} and "
            f"k+l <= {budget.bruteforce_max_colors}, got n={n}, k+l={colors}",
            n=n,
            colors=colors,
        )
    if n == 0:
        return 1
    if colors == 0:
        return 0

    # one row per vertex, one column per assignment
    grid = np.indices((colors,) * n, dtype=np.int16).reshape(n, -1)
    proper = np.ones(grid.shape[1], dtype=bool)
    for u, v in set(graph.edges):
        cu = grid[u - 1]
        if u == v:
            proper &= cu >= params.k
        else:
            cv = grid[v - 1]
            proper &= ~((cu == cv) & (cu < params.k))
    return int(proper.sum())


def _masks(graph: MultiGraph) -> Tuple[List[int], int]:
    neighbors = [0] * graph.n
    looped = 0
    for u, v in graph.edges:
        if u == v:
            looped |= 1 << (u - 1)
        else:
            neighbors[u - 1] |= 1 << (v - 1)
            neighbors[v - 1] |= 1 << (u - 1)
    return neighbors, looped


def independent_subsets(graph: MultiGraph) -> List[bool]:
    """Table over vertex bitmasks: True where the set is independent and loop-free"""
    neighbors, looped = _masks(graph)
    table = [False] * (1 << graph.n)
    table[0] = True
    for mask in range(1, 1 << graph.n):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        table[mask] = table[rest] and not (looped & low) and not (neighbors[i] & rest)
    return table


def _classical_counts(independent: List[bool], k: int) -> List[int]:
    """Proper k-colorings of every induced subgraph, indexed by vertex mask"""
    size = len(independent)
    counts = [1] + [0] * (size - 1)
    for _ in range(k):
        following = [0] * size
        for mask in range(size):
            total = 0
            sub = mask
            while True:
                if independent[sub]:
                    total += counts[mask ^ sub]
                if sub == 0:
                    break
                sub = (sub - 1) & mask
            following[mask] = total
        counts = following
    return counts


def count_subset_expansion(
    graph: MultiGraph,
    params: ColoringParams,
    budget: Optional[BudgetSettings] = None,
) -> int:
    budget = budget or settings.budget
    if params.k > budget.subset_max_k or graph.n > budget.subset_max_vertices:
        raise CapacityError(
            f"subset expansion limited to k <= {budget.subset_max_k} and "
            f"n <= {budget.subset_max_vertices}, got k={params.k}, n={graph.n}",
            n=graph.n,
            k=params.k,
        )
    counts = _classical_counts(independent_subsets(graph), params.k)
    n = graph.n
    # mask = vertices colored properly; the complement takes wildcards
    return sum(
        params.ell ** (n - mask.bit_count()) * count
        for mask, count in enumerate(counts)
        if count
    )


def independence_polynomial(graph: MultiGraph, budget: Optional[BudgetSettings] = None) -> BiPoly:
    """Sum over independent loop-free S of y^(n-|S|), which equals chi_G(1, y)"""
    budget = budget or settings.budget
    if graph.n > budget.independence_max_vertices:
        raise CapacityError(
            f"independent-set enumeration limited to n <= {budget.independence_max_vertices}",
            n=graph.n,
        )
    terms: dict = {}
    for mask, independent in enumerate(independent_subsets(graph)):
        if independent:
            exponent = graph.n - mask.bit_count()
            terms[(0, exponent)] = terms.get((0, exponent), 0) + 1
    return BiPoly(terms)


def independence_sum(graph: MultiGraph, ell: int, budget: Optional[BudgetSettings] = None) -> int:
    return independence_polynomial(graph, budget).evaluate(1, ell)
