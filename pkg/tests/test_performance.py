"""Performance tests for hypercert."""

import time
from collections.abc import Callable
from typing import Any, TypeVar

import psutil
import pytest

from hypercert.cases import (
    enumerate_case_candidates,
    enumerate_tau_critical,
    figure_graphs,
    step1_bound,
)
from hypercert.graph import complete_graph
from hypercert.oracle import search_configurations
from hypercert.realize import (
    Verdict,
    extremal_construct,
    extremal_verify,
    forced_realization,
    triples_test,
    uniqueness_check,
)
from hypercert.weights import order_bound, weighted_context

# Performance thresholds
QUICK_TIME_LIMIT = 1.0  # seconds (critical graphs, figure bounds, Step 1)
EXTREMAL_TIME_LIMIT = 5.0  # seconds (455 subsets of size 12)
ENDGAME_TIME_LIMIT = 60.0  # seconds (candidate enumeration and Triples test)
ORACLE_TIME_LIMIT = 60.0  # seconds (2^15 families at n = 6)
MEMORY_LIMIT = 500.0  # MB

T = TypeVar("T")


def get_memory_usage() -> float:
    """Get current memory usage in MB."""
    process = psutil.Process()
    return float(process.memory_info().rss / 1024 / 1024)


def measure_execution_time(
    func: Callable[..., T],
) -> Callable[..., tuple[T, float, float]]:
    """Decorator to measure execution time of a function."""

    def wrapper(*args: Any, **kwargs: Any) -> tuple[T, float, float]:
        start_time = time.time()
        start_memory = get_memory_usage()
        result = func(*args, **kwargs)
        end_time = time.time()
        end_memory = get_memory_usage()
        return result, end_time - start_time, end_memory - start_memory

    return wrapper


@measure_execution_time
def quick_checks() -> tuple[int, list[int], list[int]]:
    critical = enumerate_tau_critical(3, 6)
    bounds = [order_bound(weighted_context(g, 4)) for g in figure_graphs().values()]
    return len(critical), bounds, [step1_bound(m) for m in (2, 3, 4)]


@measure_execution_time
def extremal_checks() -> int:
    hypergraph, family = extremal_construct("complete")
    return extremal_verify(hypergraph, family).omega


@measure_execution_time
def endgame() -> tuple[list[str], Verdict]:
    candidates = enumerate_case_candidates()
    above = [c for c in candidates if c.bound > 15]
    (realization,) = forced_realization(above[0], above[0].bound)
    sources = [("tight:K5", weighted_context(complete_graph(5), 4))]
    uniqueness_check(sources, 15)
    return [c.name for c in above], triples_test(realization).verdict


def test_quick_checks_performance() -> None:
    """Test that critical graphs, figure bounds and Step 1 are instant."""
    (count, bounds, step1), execution_time, memory_usage = quick_checks()
    assert count == 4
    assert sorted(bounds) == [12, 15, 15, 16]
    assert step1 == [6, 10, 14]
    assert execution_time < QUICK_TIME_LIMIT
    assert memory_usage < MEMORY_LIMIT


def test_extremal_performance() -> None:
    """Test that the order-15 hypergraph is verified quickly."""
    omega, execution_time, memory_usage = extremal_checks()
    assert omega == 11
    assert execution_time < EXTREMAL_TIME_LIMIT
    assert memory_usage < MEMORY_LIMIT


def test_oracle_performance() -> None:
    """Test the oracle at the tight order for m = 2."""
    measured = measure_execution_time(search_configurations)
    survivors, execution_time, memory_usage = measured(6, 2)
    assert survivors
    assert execution_time < ORACLE_TIME_LIMIT
    assert memory_usage < MEMORY_LIMIT


@pytest.mark.slow
def test_endgame_performance() -> None:
    """Test the m = 4 endgame within a minute."""
    (names, verdict), execution_time, memory_usage = endgame()
    assert names == ["K4"]
    assert verdict is Verdict.REJECT
    assert execution_time < ENDGAME_TIME_LIMIT
    assert memory_usage < MEMORY_LIMIT
