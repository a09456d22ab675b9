"""Tests for private pairs and pair systems."""

from unittest.mock import patch

import pytest

from hypercert.errors import (
    BoundViolation,
    DegenerateFamily,
    FamilyError,
    NonUniformFamily,
    NoPrivatePair,
    NotEmptyIntersection,
)
from hypercert.graph import edge
from hypercert.hypergraph import CliqueFamily, Hypergraph3
from hypercert.pairs import (
    PairSystem,
    build_system,
    describe_pair,
    describe_set,
    irredundant_subfamily,
    law_violations,
    pairs_graph,
    private_pair_choices,
    private_pairs,
)
from hypercert.realize import extremal_pairs

ExtremalPair = tuple[Hypergraph3, CliqueFamily]


def test_extremal_families_are_irredundant(
    complete_extremal: ExtremalPair, cyclic_extremal: ExtremalPair
) -> None:
    """Test that no member of either reading can be dropped."""
    for _, family in (complete_extremal, cyclic_extremal):
        assert len(irredundant_subfamily(family)) == 10


def test_private_pairs_of_complete_reading(complete_extremal: ExtremalPair) -> None:
    """Test that each p_i is the only private pair of its member."""
    hypergraph, family = complete_extremal
    assert private_pairs(family, hypergraph) == extremal_pairs("complete")
    assert all(len(options) == 1 for options in private_pair_choices(family))


def test_cyclic_reading_has_no_private_pairs(cyclic_extremal: ExtremalPair) -> None:
    """Test NoPrivatePair when pairs repeat across members."""
    _, family = cyclic_extremal
    with pytest.raises(NoPrivatePair) as exc_info:
        private_pairs(family)
    assert exc_info.value.witness["index"] == 1


def test_private_pairs_checks_maximum_cliques(
    complete_extremal: ExtremalPair,
) -> None:
    """Test that a member below the clique number is refused."""
    hypergraph, _ = complete_extremal
    small = CliqueFamily(hypergraph.vertices, (frozenset({"x1", "x2", "x3"}),))
    with pytest.raises(FamilyError):
        private_pairs(small, hypergraph)


def test_build_system_of_complete_reading(complete_extremal: ExtremalPair) -> None:
    """Test the (2,4)-system of the complete reading."""
    hypergraph, family = complete_extremal
    system = build_system(hypergraph.vertices, family, private_pairs(family))
    assert system.m == 4
    assert len(system) == 10
    assert system.family() == family
    assert system.complements[0] == frozenset({"x1", "y3", "y4", "y5"})
    graph = pairs_graph(system)
    assert graph.order == 15
    assert graph.size == 10


def test_truncated_transversals_stay_within_m(
    complete_extremal: ExtremalPair,
) -> None:
    """Test tau(G \\ p_j) <= m on a built system and its enforcement."""
    hypergraph, family = complete_extremal
    system = build_system(hypergraph.vertices, family, private_pairs(family))
    # K5 on Y loses both ends of p_j: a triangle with a loop on every vertex
    assert system.truncated_transversals() == [3] * 10

    with patch("hypercert.pairs.transversal_number", return_value=5):
        with pytest.raises(BoundViolation) as exc_info:
            build_system(hypergraph.vertices, family, private_pairs(family))
    assert exc_info.value.witness == {"index": 1, "tau": 5, "m": 4}


def test_irredundant_subfamily_errors() -> None:
    """Test the shared-vertex and too-small cases."""
    with pytest.raises(NotEmptyIntersection):
        irredundant_subfamily(CliqueFamily.of([{0, 1}, {0, 2}]))
    with pytest.raises(DegenerateFamily):
        irredundant_subfamily(CliqueFamily.of([{0, 1}, {2, 3}]))


def test_irredundant_subfamily_drops_redundant_members() -> None:
    """Test greedy removal in index order."""
    family = CliqueFamily.of([{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}])
    reduced = irredundant_subfamily(family)
    assert reduced.members == family.members[:3]


def test_build_system_needs_uniform_complements() -> None:
    """Test NonUniformFamily when the complements differ in size."""
    family = CliqueFamily.of([{0, 1, 2}, {1, 2, 3, 4}, {0, 4}])
    with pytest.raises(NonUniformFamily):
        build_system(range(5), family, [edge(0, 1), edge(3, 4), edge(0, 4)])


def test_system_law() -> None:
    """Test law_violations and the system validation built on it."""
    pairs = [edge(0, 1), edge(2, 3)]
    good = [frozenset({2, 3}), frozenset({0, 1})]
    assert law_violations(pairs, good) == []
    bad = [frozenset({0, 1}), frozenset({0, 1})]
    assert law_violations(pairs, bad) == [(1, 1), (2, 1)]
    system = PairSystem(frozenset(range(4)), 2, tuple(pairs), tuple(good))
    assert system.members == (frozenset({0, 1}), frozenset({2, 3}))
    with pytest.raises(FamilyError):
        PairSystem(frozenset(range(4)), 2, tuple(pairs), tuple(bad))


def test_system_validation() -> None:
    """Test the size and coverage checks of a pair system."""
    pairs = (edge(0, 1), edge(2, 3))
    with pytest.raises(NonUniformFamily):
        PairSystem(frozenset(range(4)), 1, pairs, (frozenset({2}), frozenset({0, 1})))
    with pytest.raises(FamilyError):
        PairSystem(frozenset(range(5)), 1, pairs, (frozenset({2}), frozenset({0})))
    with pytest.raises(FamilyError):
        PairSystem(frozenset(range(4)), 1, pairs, (frozenset({2}),))


def test_describe_helpers() -> None:
    """Test the label lists used in witnesses."""
    assert describe_pair(edge("y2", "y1")) == ["y1", "y2"]
    assert describe_set({"x10", "x2", "y1"}) == ["x10", "x2", "y1"]
