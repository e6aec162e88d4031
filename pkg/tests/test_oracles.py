"""
Tests for the Counting Oracles
==============================

Brute force, subset expansion and independent sets against the
symbolic engine (acceptance 1 and 11).
"""

import pytest

from wildcolor.algebra.bipoly import BiPoly
from wildcolor.core.config import BudgetSettings
from wildcolor.core.exceptions import CapacityError, InputError
from wildcolor.engine.oracles import (
    count_bruteforce,
    count_subset_expansion,
    independence_polynomial,
    independence_sum,
    independent_subsets,
    is_proper,
)
from wildcolor.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, path_graph
from wildcolor.models.schemas import ColoringParams

KL_GRID = ColoringParams.grid(3)


class TestIsProper:
    """Tests for the properness predicate"""

    def test_wildcards_never_conflict(self, k3):
        params = ColoringParams.of(1, 1)

        assert is_proper(k3, [1, 1, 0], params)
        assert not is_proper(k3, [0, 0, 1], params)

    def test_loop_needs_wildcard(self):
        params = ColoringParams.of(1, 1)

        assert not is_proper(cycle_graph(1), [0], params)
        assert is_proper(cycle_graph(1), [1], params)

    def test_assignment_shape_checked(self, k3):
        with pytest.raises(InputError):
            is_proper(k3, [0, 1], ColoringParams.of(2, 0))
        with pytest.raises(InputError):
            is_proper(k3, [0, 1, 5], ColoringParams.of(2, 0))


class TestBruteForce:
    """Tests for exhaustive counting"""

    def test_known_counts(self, k3, c4):
        assert count_bruteforce(k3, ColoringParams.of(2, 1)) == 13
        assert count_bruteforce(c4, ColoringParams.of(2, 1)) == 35
        assert count_bruteforce(MultiGraph(3), ColoringParams.of(1, 1)) == 8

    def test_empty_graph_and_no_colors(self):
        assert count_bruteforce(MultiGraph.empty(), ColoringParams.of(0, 0)) == 1
        assert count_bruteforce(path_graph(2), ColoringParams.of(0, 0)) == 0

    def test_budget(self, test_budget):
        with pytest.raises(CapacityError):
            count_bruteforce(path_graph(9), ColoringParams.of(1, 1), test_budget)
        with pytest.raises(CapacityError):
            count_bruteforce(path_graph(2), ColoringParams.of(4, 3), test_budget)

    def test_budget_flag_raises_cap(self):
        budget = BudgetSettings(bruteforce_max_vertices=10)

        assert count_bruteforce(path_graph(9), ColoringParams.of(1, 1), budget) == 89


class TestSubsetExpansion:
    """Tests for the wildcard-set expansion"""

    def test_known_counts(self, k3, c4):
        assert count_subset_expansion(k3, ColoringParams.of(2, 1)) == 13
        assert count_subset_expansion(c4, ColoringParams.of(2, 1)) == 35

    def test_pure_chromatic(self, k3):
        assert count_subset_expansion(k3, ColoringParams.of(3, 0)) == 6

    def test_budget(self, test_budget):
        with pytest.raises(CapacityError):
            count_subset_expansion(path_graph(3), ColoringParams.of(5, 0), test_budget)
        with pytest.raises(CapacityError):
            count_subset_expansion(path_graph(13), ColoringParams.of(1, 0), test_budget)


class TestIndependence:
    """Tests for independent-set enumeration"""

    def test_independent_subsets_of_path(self):
        table = independent_subsets(path_graph(3))

        assert [mask for mask, ok in enumerate(table) if ok] == [0, 1, 2, 4, 5]

    def test_independence_polynomial(self):
        y = BiPoly.y()

        assert independence_polynomial(path_graph(3)) == y ** 3 + 3 * y ** 2 + y

    def test_looped_vertex_never_independent(self):
        assert independence_polynomial(cycle_graph(1)) == BiPoly.y()


class TestOracleEquivalence:
    """Symbolic chi equals both oracles (acceptance 1)"""

    def test_simple_corpus_exhaustive(self, simple_corpus, shared_engine, test_budget):
        assert len(simple_corpus) == 53
        for graph in simple_corpus:
            chi = shared_engine.compute(graph)
            for params in KL_GRID:
                expected = chi.evaluate(params.k, params.ell)
                assert count_bruteforce(graph, params, test_budget) == expected, graph
                assert count_subset_expansion(graph, params, test_budget) == expected, graph

    @pytest.mark.slow
    def test_random_multigraphs(self, random_corpus, shared_engine, test_budget):
        for graph in random_corpus:
            chi = shared_engine.compute(graph)
            for params in KL_GRID:
                expected = chi.evaluate(params.k, params.ell)
                assert count_bruteforce(graph, params, test_budget) == expected, graph
                assert count_subset_expansion(graph, params, test_budget) == expected, graph


class TestIndependenceSpecialization:
    """chi_G(1, l) is the independence-weighted sum (acceptance 11)"""

    def test_corpus(self, simple_corpus, shared_engine):
        for graph in simple_corpus:
            at_one = shared_engine.compute(graph).substitute(x=1)
            assert independence_polynomial(graph) == at_one, graph
            for ell in range(4):
                assert independence_sum(graph, ell) == at_one.evaluate(1, ell)

    def test_multigraphs(self, small_multigraph, shared_engine):
        assert independence_polynomial(small_multigraph) == shared_engine.compute(
            small_multigraph
        ).substitute(x=1)

    def test_complete_graph(self):
        y = BiPoly.y()

        assert independence_polynomial(complete_graph(4)) == y ** 4 + 4 * y ** 3
