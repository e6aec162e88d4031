"""
WildColor Test Configuration
============================

Pytest fixtures and configuration.
"""

from typing import List

import pytest

from wildcolor.core.config import BudgetSettings, VerificationSettings, settings
from wildcolor.engine.chi import ChiEngine
from wildcolor.graphs.corpus import random_multigraphs, simple_graphs
from wildcolor.graphs.multigraph import MultiGraph, complete_graph, cycle_graph, path_graph
from wildcolor.models.schemas import EngineConfig


@pytest.fixture
def engine() -> ChiEngine:
    """Fresh engine with default configuration"""
    return ChiEngine(EngineConfig())


@pytest.fixture(scope="session")
def shared_engine() -> ChiEngine:
    """One memo table for the heavy sweeps"""
    return ChiEngine(EngineConfig())


@pytest.fixture(scope="session")
def simple_corpus() -> List[MultiGraph]:
    """Every simple graph on at most 5 vertices, up to isomorphism"""
    return simple_graphs(5)


@pytest.fixture(scope="session")
def random_corpus() -> List[MultiGraph]:
    """500 seeded multigraphs, n <= 6, at most 8 edges, loops and parallels allowed"""
    options = settings.verification
    return random_multigraphs(
        count=500,
        max_vertices=6,
        max_edges=8,
        seed=options.random_seed,
    )


@pytest.fixture
def small_multigraph() -> MultiGraph:
    """Triangle with a doubled edge, a loop at 3 and a pendant vertex"""
    return MultiGraph(4, [(1, 2), (1, 2), (2, 3), (1, 3), (3, 3), (3, 4)])


@pytest.fixture
def p2() -> MultiGraph:
    return path_graph(2)


@pytest.fixture
def c4() -> MultiGraph:
    return cycle_graph(4)


@pytest.fixture
def k3() -> MultiGraph:
    return complete_graph(3)


@pytest.fixture
def test_budget() -> BudgetSettings:
    """Budget with the documented defaults, independent of the environment"""
    return BudgetSettings(
        bruteforce_max_vertices=8,
        bruteforce_max_colors=6,
        subset_max_k=4,
        subset_max_vertices=12,
        canonical_max_vertices=10,
        crosscheck_max_n=12,
        independence_max_vertices=16,
    )


@pytest.fixture
def test_options() -> VerificationSettings:
    """Small sweep sizes for service tests"""
    return VerificationSettings(
        random_graphs=40,
        random_seed=7,
        random_max_vertices=5,
        random_max_edges=6,
        recurrence_terms=12,
        max_recurrence_order=3,
    )


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph in .mg format and return its path"""

    def _write(text: str, name: str = "graph.mg"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
