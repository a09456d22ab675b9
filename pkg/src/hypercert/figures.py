"""Graphviz DOT export for weighted private-pairs graphs."""

from pathlib import Path
from typing import List, Optional, Sequence

import pydot

from hypercert.cases import CaseCandidate
from hypercert.dependencies import DependencyChecker
from hypercert.graph import LoopGraph, ends, graph_name
from hypercert.logging import get_logger
from hypercert.utils import write_atomic_text
from hypercert.weights import WeightedContext, order_bound

logger = get_logger(__name__)

DEFAULT_RENDER_FORMAT = "svg"


def graph_dot(graph: LoopGraph, title: Optional[str] = None) -> pydot.Dot:
    """DOT drawing of ``graph``; loops become self-edges."""
    dot = pydot.Dot(graph_type="graph")
    dot.set_label(title or graph_name(graph))
    for vertex in graph.sorted_vertices():
        dot.add_node(pydot.Node(str(vertex), shape="circle"))
    for e in graph.sorted_edges():
        u, v = ends(e)
        dot.add_edge(pydot.Edge(str(u), str(v)))
    return dot


def weighted_dot(context: WeightedContext, title: Optional[str] = None) -> pydot.Dot:
    """DOT drawing with edge weights; edges of weight 1 stay unlabeled.

    The graph label carries the order bound, as in ``K4  n<=16``.
    """
    if title is None:
        title = f"{graph_name(context.graph)}  n<={order_bound(context)}"
    dot = pydot.Dot(graph_type="graph")
    dot.set_label(title)
    for vertex in context.graph.sorted_vertices():
        dot.add_node(pydot.Node(str(vertex), shape="circle"))
    for e, weight in context.weight_list():
        u, v = ends(e)
        drawn = pydot.Edge(str(u), str(v))
        if weight != 1:
            drawn.set_label(str(weight))
        dot.add_edge(drawn)
    return dot


def write_dot(dot: pydot.Dot, path: Path) -> Path:
    write_atomic_text(path, dot.to_string())
    return path


def render(dot: pydot.Dot, path: Path, fmt: str = DEFAULT_RENDER_FORMAT) -> bool:
    """Render through the Graphviz binary; ``False`` when it is unavailable."""
    available, error = DependencyChecker().check_graphviz()
    if not available:
        logger.warning(f"⚠️  Skipping {path.name}: {error}")
        return False
    dot.write(str(path), format=fmt)
    return True


def candidate_filename(index: int, candidate: CaseCandidate) -> str:
    name = candidate.name.replace("+", "_").replace(",", "-")
    return f"{index:02d}_{candidate.core.value.lower()}_{name}_n{candidate.bound}.dot"


def export_candidates(
    candidates: Sequence[CaseCandidate],
    directory: Path,
    render_format: Optional[str] = None,
) -> List[Path]:
    """One DOT file per candidate, optionally rendered next to it.

    Args:
        candidates: Candidates in table order
        directory: Target directory (created when missing)
        render_format: Graphviz output format such as ``svg`` or ``png``

    Returns:
        Paths of the DOT files written
    """
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for index, candidate in enumerate(candidates, start=1):
        dot = weighted_dot(candidate.context())
        path = write_dot(dot, directory / candidate_filename(index, candidate))
        written.append(path)
        if render_format is not None:
            render(dot, path.with_suffix(f".{render_format}"), render_format)
    logger.debug(f"wrote {len(written)} DOT files to {directory}")
    return written
