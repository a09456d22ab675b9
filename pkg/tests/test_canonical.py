"""Tests for canonical codes of loop graphs."""

import random

import pytest

from hypercert.canonical import (
    canonical_code,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
)
from hypercert.enumeration import enumerate_graphs
from hypercert.graph import (
    LoopGraph,
    complete_graph,
    cycle_graph,
    edge,
    matching_graph,
    path_graph,
    relabel,
    star_graph,
)

SHUFFLE_ROUNDS = 5
GRAPH_ORDERS = [
    *range(1, 6),
    pytest.param(6, marks=pytest.mark.slow),
    pytest.param(7, marks=pytest.mark.slow),
]


def _shuffled(graph: LoopGraph, rng: random.Random) -> LoopGraph:
    vertices = graph.sorted_vertices()
    targets = list(range(len(vertices)))
    rng.shuffle(targets)
    return relabel(graph, dict(zip(vertices, targets)))


@pytest.mark.parametrize("order", GRAPH_ORDERS)
def test_code_is_invariant_under_relabelling(order: int) -> None:
    """Test that random relabellings keep the code."""
    rng = random.Random(order)
    for graph in enumerate_graphs(order):
        code = canonical_code(graph)
        for _ in range(SHUFFLE_ROUNDS):
            assert canonical_code(_shuffled(graph, rng)) == code


def test_codes_separate_non_isomorphic_graphs() -> None:
    """Test that the 5-vertex graphs all get different codes."""
    codes = {canonical_code(graph) for graph in enumerate_graphs(5)}
    assert len(codes) == len(enumerate_graphs(5))


def test_loops_change_the_code() -> None:
    """Test that a loop is part of the isomorphism type."""
    plain = path_graph(3)
    looped_end = LoopGraph(plain.vertices, plain.edges | {edge(0, 0)})
    looped_middle = LoopGraph(plain.vertices, plain.edges | {edge(1, 1)})
    codes = {canonical_code(g) for g in (plain, looped_end, looped_middle)}
    assert len(codes) == 3


def test_regular_graphs_with_equal_degrees() -> None:
    """Test graphs colour refinement alone cannot tell apart."""
    two_triangles = LoopGraph.from_edges(
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert is_isomorphic(cycle_graph(6), _shuffled(cycle_graph(6), random.Random(3)))


def test_canonical_form_and_labeling() -> None:
    """Test that the canonical form is an isomorphic copy on 0..n-1."""
    star = relabel(star_graph(3), {0: "hub", 1: "x", 2: "y", 3: "z"})
    form = canonical_form(star)
    assert form.vertices == frozenset(range(4))
    assert is_isomorphic(form, star)
    assert sorted(map(str, canonical_labeling(star))) == ["hub", "x", "y", "z"]


def test_is_isomorphic_checks_order_and_size_first() -> None:
    """Test the quick rejections."""
    assert not is_isomorphic(complete_graph(3), path_graph(3))
    assert not is_isomorphic(matching_graph(2), path_graph(3))


def test_empty_graph_code() -> None:
    """Test the code of the graph without vertices."""
    code = canonical_code(LoopGraph(frozenset()))
    assert code.order == 0
    assert code.hexdigest().startswith("n0e0")
