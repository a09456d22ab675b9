"""Tests for DOT export of weighted graphs."""

from pathlib import Path
from unittest.mock import patch

from hypercert.cases import CaseCandidate
from hypercert.figures import (
    candidate_filename,
    export_candidates,
    graph_dot,
    render,
    weighted_dot,
    write_dot,
)
from hypercert.graph import LoopGraph, complete_graph
from hypercert.weights import weighted_context


def test_weighted_dot_labels_heavy_edges(k4_candidate: CaseCandidate) -> None:
    """Test that weight-2 edges are labelled and the title carries the bound."""
    dot = weighted_dot(k4_candidate.context())
    edges = dot.get_edges()
    assert len(edges) == 6
    assert all(e.get_label() == "2" for e in edges)
    assert "n<=16" in dot.get_label()
    assert len(dot.get_nodes()) == 4


def test_unit_weights_stay_unlabelled() -> None:
    """Test K5 at m = 4, where every weight is 1."""
    dot = weighted_dot(weighted_context(complete_graph(5), 4), title="K5")
    assert all(e.get_label() is None for e in dot.get_edges())
    assert dot.get_label() == "K5"


def test_graph_dot_draws_loops() -> None:
    """Test that a loop becomes a self-edge."""
    dot = graph_dot(LoopGraph.from_edges([("a", "a"), ("a", "b")]))
    pairs = sorted((e.get_source(), e.get_destination()) for e in dot.get_edges())
    assert pairs == [("a", "a"), ("a", "b")]


def test_write_dot(temp_output_dir: Path, k4_candidate: CaseCandidate) -> None:
    """Test the DOT text written to disk."""
    path = write_dot(weighted_dot(k4_candidate.context()), temp_output_dir / "k4.dot")
    text = path.read_text(encoding="utf-8")
    assert text.startswith("graph")
    assert "--" in text


def test_candidate_filename(k4_candidate: CaseCandidate) -> None:
    """Test file names built from index, class, name and bound."""
    assert candidate_filename(1, k4_candidate) == "01_k4_K4_n16.dot"


def test_export_candidates(
    temp_output_dir: Path, k4_candidate: CaseCandidate
) -> None:
    """Test one DOT file per candidate."""
    written = export_candidates([k4_candidate], temp_output_dir / "figures")
    assert [p.name for p in written] == ["01_k4_K4_n16.dot"]
    assert written[0].exists()


def test_render_skips_without_graphviz(
    temp_output_dir: Path, k4_candidate: CaseCandidate
) -> None:
    """Test that rendering is skipped when dot is missing."""
    with patch("shutil.which", return_value=None):
        written = export_candidates([k4_candidate], temp_output_dir, "svg")
        assert not render(graph_dot(complete_graph(3)), temp_output_dir / "t.svg")
    assert written[0].exists()
    assert not written[0].with_suffix(".svg").exists()
