"""Tests for edge weights, order bounds and the zero-weight reduction."""

import pytest

from hypercert.enumeration import enumerate_graphs
from hypercert.errors import (
    GraphError,
    InfeasibleContext,
    LoopWeightUndefined,
    MissingEdge,
)
from hypercert.graph import (
    LoopGraph,
    complete_graph,
    cycle_graph,
    edge,
    graph_name,
    matching_graph,
    remove_edge,
)
from hypercert.weights import (
    EdgeKind,
    check_chain,
    classify_edge,
    edge_weight,
    order_bound,
    reduce_zero_weights,
    step2_reduce,
    total_weight,
    weighted_context,
)

EXPECTED_BOUNDS_AT_FOUR = {"K4": 16, "C5": 15, "3K2": 12, "K2+C3": 13, "K5": 15}
EXHAUSTIVE_MAX_ORDER = 7
QUICK_MAX_ORDER = 5
MAX_M = 6


def _graphs_up_to(order: int) -> list[LoopGraph]:
    return [g for n in range(2, order + 1) for g in enumerate_graphs(n) if g.size]


def test_order_bounds_at_four(k2_plus_c3: LoopGraph, triple_star: LoopGraph) -> None:
    """Test the bounds of the graphs drawn in the figures."""
    graphs = {
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "3K2": matching_graph(3),
        "K2+C3": k2_plus_c3,
        "K5": complete_graph(5),
    }
    for name, graph in graphs.items():
        assert order_bound(weighted_context(graph, 4)) == EXPECTED_BOUNDS_AT_FOUR[name]
    stars = weighted_context(triple_star, 4)
    assert set(stars.weights.values()) == {1}
    assert order_bound(stars) == 15


def test_weights_of_k4_and_k5() -> None:
    """Test the uniform weights of complete graphs."""
    k4 = weighted_context(complete_graph(4), 4)
    assert set(k4.weights.values()) == {2}
    assert total_weight(k4) == 12
    k5 = weighted_context(complete_graph(5), 4)
    assert set(k5.weights.values()) == {1}


def test_negative_weight_is_infeasible() -> None:
    """Test InfeasibleContext for K4 with m = 1."""
    context = weighted_context(complete_graph(4), 1)
    assert context.negative_edges()
    with pytest.raises(InfeasibleContext) as exc_info:
        order_bound(context)
    assert exc_info.value.witness


def test_weight_is_undefined_for_loops_and_missing_edges() -> None:
    """Test the edge checks of the weight function."""
    looped = LoopGraph.from_edges([(0, 0), (0, 1)])
    with pytest.raises(LoopWeightUndefined):
        edge_weight(looped, 2, edge(0, 0))
    with pytest.raises(MissingEdge):
        edge_weight(complete_graph(3), 2, edge(0, 5))
    with pytest.raises(GraphError):
        weighted_context(looped, 2)


def test_classify_edge(pendant_triangle: LoopGraph, k2_plus_c3: LoopGraph) -> None:
    """Test the isolated, pendant and internal classes."""
    assert classify_edge(k2_plus_c3, edge("a", "b")) is EdgeKind.ISOLATED
    assert classify_edge(pendant_triangle, edge("a", "b")) is EdgeKind.PENDANT
    assert classify_edge(pendant_triangle, edge("c", "d")) is EdgeKind.INTERNAL
    with pytest.raises(MissingEdge):
        classify_edge(pendant_triangle, edge("a", "d"))


def test_reduction_of_isolated_edge(k2_plus_c3: LoopGraph) -> None:
    """Test that removing the isolated K2 raises the bound from 5 to 6."""
    context = weighted_context(k2_plus_c3, 2)
    assert set(context.weights.values()) == {0}
    assert order_bound(context) == 5

    reduction = step2_reduce(context)
    assert [step.kind for step in reduction.steps] == [EdgeKind.ISOLATED]
    assert reduction.steps[0].edge == edge("a", "b")
    assert (reduction.start_bound, reduction.final_bound) == (5, 6)
    assert graph_name(reduction.reduced_graph) == "C3"
    assert reduction.tau == 2
    assert reduction.vertex_edge_total == 6
    assert set(reduction.final.weights.values()) == {1}


def test_reduction_of_pendant_edge(pendant_triangle: LoopGraph) -> None:
    """Test that the pendant edge goes first and the bound rises to 6."""
    context = weighted_context(pendant_triangle, 2)
    assert context.weights[edge("c", "d")] == 1
    assert context.zero_edges() == [edge("a", "b"), edge("b", "c"), edge("b", "d")]
    assert order_bound(context) == 5

    final, steps = reduce_zero_weights(context)
    assert len(steps) == 1
    assert steps[0].kind is EdgeKind.PENDANT
    assert steps[0].to_dict() == {
        "edge": "ab",
        "kind": "pendant",
        "bound_before": 5,
        "bound_after": 6,
    }
    assert order_bound(final) == 6


def test_reduction_stops_below_three_edges() -> None:
    """Test that two edges are never reduced further."""
    context = weighted_context(matching_graph(2), 1)
    assert context.zero_edges()
    final, steps = reduce_zero_weights(context)
    assert steps == []
    assert final is context


def test_chain_on_quick_graphs() -> None:
    """Test the structural chain on every edge of the small graphs."""
    for graph in _graphs_up_to(QUICK_MAX_ORDER):
        for p in graph.sorted_edges():
            report = check_chain(graph, 4, p)
            assert report.structural, report.to_dict()


@pytest.mark.slow
def test_chain_on_all_graphs_up_to_seven_vertices() -> None:
    """Test tau(G)-1 <= tau(G-p) <= tau(G\\p) exhaustively."""
    for graph in _graphs_up_to(EXHAUSTIVE_MAX_ORDER):
        for p in graph.sorted_edges():
            report = check_chain(graph, MAX_M, p)
            assert report.structural, report.to_dict()


def _reduction_never_lowers_the_bound(max_order: int) -> None:
    for graph in _graphs_up_to(max_order):
        if graph.size < 3:
            continue
        for m in range(MAX_M + 1):
            context = weighted_context(graph, m)
            if context.negative_edges() or not context.zero_edges():
                continue
            final, steps = reduce_zero_weights(context)
            assert order_bound(final) >= order_bound(context)
            for step in steps:
                assert step.bound_after >= step.bound_before


def test_reduction_monotone_on_quick_graphs() -> None:
    """Test bound monotonicity of the reduction on small graphs."""
    _reduction_never_lowers_the_bound(QUICK_MAX_ORDER)


@pytest.mark.slow
def test_reduction_monotone_on_all_graphs_up_to_seven_vertices() -> None:
    """Test bound monotonicity of the reduction exhaustively."""
    _reduction_never_lowers_the_bound(EXHAUSTIVE_MAX_ORDER)


def _zero_edge_removal_never_lowers_the_bound(max_order: int) -> None:
    for graph in _graphs_up_to(max_order):
        if graph.size < 3:
            continue
        for m in range(MAX_M + 1):
            context = weighted_context(graph, m)
            if context.negative_edges():
                continue
            bound = order_bound(context)
            for p in context.zero_edges():
                reduced = weighted_context(remove_edge(graph, p), m)
                assert not reduced.negative_edges(), (str(graph), m, p)
                assert order_bound(reduced) >= bound, (str(graph), m, p)


def test_zero_edge_removal_on_quick_graphs() -> None:
    """Test that dropping any zero-weight edge keeps the bound on small graphs."""
    _zero_edge_removal_never_lowers_the_bound(QUICK_MAX_ORDER)


@pytest.mark.slow
def test_zero_edge_removal_on_all_graphs_up_to_seven_vertices() -> None:
    """Test that dropping any zero-weight edge keeps the bound exhaustively."""
    _zero_edge_removal_never_lowers_the_bound(EXHAUSTIVE_MAX_ORDER)
