"""Tests for realizations, the triples test and the extremal construction."""

import pytest

from hypercert.cases import CaseCandidate
from hypercert.errors import Infeasible, PreconditionFailed, VerificationFailure
from hypercert.graph import complete_graph, edge, format_edge
from hypercert.hypergraph import CliqueFamily, Hypergraph3, clique_number
from hypercert.realize import (
    Realization,
    Verdict,
    describe_system,
    extremal_pairs,
    extremal_verify,
    forced_realization,
    forcing_member,
    fresh_vertices,
    pair_privacy,
    triples_test,
    uniqueness_check,
    witness_holds,
)
from hypercert.weights import weighted_context

ExtremalPair = tuple[Hypergraph3, CliqueFamily]

EXPECTED_K4_ORDER = 16
EXPECTED_K4_K = 12
EXTREMAL_ORDER = 15


def test_k4_realization_is_forced(k4_realization: Realization) -> None:
    """Test the only system behind K4 on 16 vertices."""
    system = k4_realization.system
    assert [format_edge(p) for p in system.pairs] == ["bc", "bd", "be", "cd", "ce", "de"]
    assert system.complements[0] == frozenset({"d", "e", "1", "1'"})
    assert k4_realization.order == EXPECTED_K4_ORDER
    assert k4_realization.k == EXPECTED_K4_K
    assert k4_realization.pairs_bound() == EXPECTED_K4_ORDER
    assert k4_realization.within_order_bound
    assert describe_system(system)[0] == {
        "index": 1,
        "pair": ["b", "c"],
        "complement": ["1", "1'", "d", "e"],
    }


def test_triples_test_rejects_k4(k4_realization: Realization) -> None:
    """Test that thirteen vertices are forced into a clique."""
    verdict = triples_test(k4_realization)
    assert verdict.verdict is Verdict.REJECT
    assert verdict.k == EXPECTED_K4_K
    ground = k4_realization.system.ground
    assert verdict.witness == ground - {"c", "d", "e"}
    assert witness_holds(k4_realization, verdict.witness)
    assert verdict.to_dict()["verdict"] == "REJECT"


def test_forcing_member(k4_realization: Realization) -> None:
    """Test which complement a triple avoids."""
    assert forcing_member(k4_realization, frozenset({"b", "c", "d"})) is None
    assert forcing_member(k4_realization, frozenset({"b", "c", "2"})) == 1


def test_realization_needs_the_exact_bound(k4_candidate: CaseCandidate) -> None:
    """Test targets above and below the order bound."""
    with pytest.raises(Infeasible):
        forced_realization(k4_candidate, EXPECTED_K4_ORDER + 1)
    with pytest.raises(PreconditionFailed):
        forced_realization(k4_candidate, EXPECTED_K4_ORDER - 1)


def test_fresh_vertices_avoid_taken_labels() -> None:
    """Test the primed labels of the outside vertices."""
    edges = [edge("a", "b"), edge("c", "d")]
    weights = {edges[0]: 2, edges[1]: 1}
    assert fresh_vertices(edges, weights, {"a", "b", "1"}) == [["1_2", "1'"], ["2"]]


def test_k5_realizes_the_complete_reading() -> None:
    """Test that the tight K5 system passes and is the complete reading."""
    sources = [("tight:K5", weighted_context(complete_graph(5), 4))]
    report = uniqueness_check(sources, EXTREMAL_ORDER)
    (entry,) = report.entries
    assert entry.verdict.verdict is Verdict.PASS
    assert entry.matches == {"complete": True, "cyclic": False}
    assert report.unique_reading() == "complete"
    assert entry.to_dict()["isomorphic_to"] == {"complete": True, "cyclic": False}


def test_uniqueness_skips_other_orders() -> None:
    """Test that sources with a different bound are ignored."""
    report = uniqueness_check([("K4", weighted_context(complete_graph(4), 4))], 15)
    assert report.entries == ()
    assert report.unique_reading() is None


def test_extremal_pairs() -> None:
    """Test both pairings and the unknown pairing."""
    cyclic = extremal_pairs("cyclic")
    assert len(cyclic) == 10
    assert cyclic[0] == cyclic[5] == edge("y1", "y2")
    assert len(set(extremal_pairs("complete"))) == 10
    with pytest.raises(PreconditionFailed):
        extremal_pairs("star")


def test_complete_reading(complete_extremal: ExtremalPair) -> None:
    """Test the complete reading: clique number 11 but five extra cliques."""
    hypergraph, family = complete_extremal
    report = extremal_verify(hypergraph, family, extremal_pairs("complete"))
    assert report.order == EXTREMAL_ORDER
    assert report.omega == 11
    assert len(report.maximum_cliques) == 15
    assert {check.name for check in report.failed} == {
        "maximum_clique_count",
        "maximum_cliques_equal_family",
    }
    assert all(p.pair_is_private and p.private_count == 1 for p in report.privacy)


def test_cyclic_reading(cyclic_extremal: ExtremalPair) -> None:
    """Test the cyclic reading: a 12-clique and no private pairs."""
    hypergraph, family = cyclic_extremal
    assert clique_number(hypergraph) == 12
    report = extremal_verify(hypergraph, family, extremal_pairs("cyclic"))
    assert "clique_number" in {check.name for check in report.failed}
    assert all(p.private_count == 0 for p in report.privacy)
    with pytest.raises(VerificationFailure):
        extremal_verify(hypergraph, family, strict=True)


def test_pair_privacy_to_dict(complete_extremal: ExtremalPair) -> None:
    """Test the serialized privacy rows."""
    _, family = complete_extremal
    (first, *_) = pair_privacy(family, extremal_pairs("complete"))
    assert first.to_dict() == {
        "index": 1,
        "pair": ["y1", "y2"],
        "pair_is_private": True,
        "private_count": 1,
    }
