"""Common test fixtures and utilities."""

import logging
from collections.abc import Generator
from pathlib import Path

import pytest

from hypercert.cases import CaseCandidate, make_candidate
from hypercert.graph import LoopGraph, complete_graph, disjoint_union
from hypercert.hypergraph import CliqueFamily, Hypergraph3
from hypercert.logging import ROOT_LOGGER
from hypercert.realize import Realization, extremal_construct, forced_realization


@pytest.fixture(autouse=True)
def reset_logging() -> Generator[None, None, None]:
    """Drop the console handler so every CLI invocation binds a fresh stream."""
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


@pytest.fixture
def temp_output_dir(tmp_path: Path) -> Path:
    """Create a temporary output directory."""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    return output_dir


@pytest.fixture
def k4() -> LoopGraph:
    """``K4`` on ``b, c, d, e``, the graph with the largest bound at m = 4."""
    return complete_graph(4, ["b", "c", "d", "e"])


@pytest.fixture
def k2_plus_c3() -> LoopGraph:
    """``K2`` on ``a, b`` next to the triangle ``c, d, e``."""
    return LoopGraph.from_edges([("a", "b"), ("c", "d"), ("d", "e"), ("c", "e")])


@pytest.fixture
def pendant_triangle() -> LoopGraph:
    """Triangle ``b, c, d`` with the pendant edge ``a b``."""
    return LoopGraph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("b", "d")])


@pytest.fixture
def triple_star() -> LoopGraph:
    """Three disjoint copies of ``K1,2``."""
    cherry = LoopGraph.from_edges([(0, 1), (0, 2)])
    return disjoint_union([cherry, cherry, cherry])


@pytest.fixture
def k4_candidate(k4: LoopGraph) -> CaseCandidate:
    candidate = make_candidate(k4, 4)
    assert candidate is not None
    return candidate


@pytest.fixture
def k4_realization(k4_candidate: CaseCandidate) -> Realization:
    """The only system realizing ``K4`` on 16 vertices."""
    (realization,) = forced_realization(k4_candidate, 16)
    return realization


@pytest.fixture
def complete_extremal() -> tuple[Hypergraph3, CliqueFamily]:
    return extremal_construct("complete")


@pytest.fixture
def cyclic_extremal() -> tuple[Hypergraph3, CliqueFamily]:
    return extremal_construct("cyclic")
