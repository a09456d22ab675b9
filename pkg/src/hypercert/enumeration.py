"""Enumeration of small graphs up to isomorphism."""

from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from hypercert.canonical import CanonicalCode, canonical_code
from hypercert.errors import OutOfRange
from hypercert.graph import (
    LoopGraph,
    disjoint_union,
    edge,
    empty_graph,
    integer_labels,
    is_connected,
    is_tau_critical,
    transversal_number,
)
from hypercert.logging import get_logger

logger = get_logger(__name__)


def _by_code(graphs: Dict[CanonicalCode, LoopGraph]) -> List[LoopGraph]:
    return [graphs[code] for code in sorted(graphs)]


def enumerate_graphs(
    order: int,
    *,
    max_degree: Optional[int] = None,
    max_tau: Optional[int] = None,
    connected: bool = False,
) -> List[LoopGraph]:
    """All loop-free graphs on exactly ``order`` vertices, up to isomorphism.

    Graphs are grown one edge at a time from the edgeless graph and
    deduplicated by canonical code. Degree and transversal caps are
    monotone under adding edges, so they prune whole branches.

    Args:
        order: Number of vertices (isolated vertices allowed)
        max_degree: Optional cap on every vertex degree
        max_tau: Optional cap on the transversal number
        connected: Keep only connected graphs

    Returns:
        Graphs on ``0..order-1`` in canonical-code order
    """
    if order < 0:
        raise OutOfRange(f"Graph order must be non-negative, got {order}")

    start = empty_graph(order)
    seen: Dict[CanonicalCode, LoopGraph] = {canonical_code(start): start}
    level = [start]
    slots = [edge(u, v) for u, v in combinations(range(order), 2)]

    while level:
        following: List[LoopGraph] = []
        for graph in level:
            for slot in slots:
                if slot in graph.edges:
                    continue
                if max_degree is not None and any(
                    graph.degree(v) >= max_degree for v in slot
                ):
                    continue
                child = LoopGraph(graph.vertices, graph.edges | {slot})
                if max_tau is not None and transversal_number(child) > max_tau:
                    continue
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = child
                    following.append(child)
        level = following

    result = _by_code(seen)
    if connected:
        result = [g for g in result if is_connected(g)]
    logger.debug(f"{len(result)} graphs on {order} vertices")
    return result


def enumerate_trees(max_order: int) -> List[LoopGraph]:
    """Unlabeled trees on 1..max_order vertices, grown by leaf addition."""
    if max_order < 1:
        return []
    level = [empty_graph(1)]
    trees: List[LoopGraph] = list(level)
    for size in range(2, max_order + 1):
        grown: Dict[CanonicalCode, LoopGraph] = {}
        for tree in level:
            for v in tree.sorted_vertices():
                child = LoopGraph(
                    tree.vertices | {size - 1}, tree.edges | {edge(v, size - 1)}
                )
                grown.setdefault(canonical_code(child), child)
        level = _by_code(grown)
        trees.extend(level)
    return trees


@lru_cache(maxsize=None)
def connected_tau_critical(tau: int) -> Tuple[LoopGraph, ...]:
    """Connected tau-critical graphs with the given transversal number.

    Besides ``K2`` these have ``tau+1 .. 2 tau - 1`` vertices and maximum
    degree at most ``2 tau - n + 1``.
    """
    if tau < 1:
        return ()
    if tau == 1:
        return (LoopGraph.from_edges([(0, 1)]),)

    found: List[LoopGraph] = []
    for n in range(tau + 1, 2 * tau):
        for graph in enumerate_graphs(
            n, max_degree=2 * tau - n + 1, max_tau=tau, connected=True
        ):
            if transversal_number(graph) == tau and is_tau_critical(graph):
                found.append(graph)
    logger.debug(f"{len(found)} connected tau-critical graphs with tau={tau}")
    return tuple(found)


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _assemble(
    pieces: Mapping[int, Sequence[LoopGraph]], tau: int, max_order: int
) -> List[LoopGraph]:
    """Disjoint unions of pieces whose transversal numbers sum to ``tau``."""
    found: Dict[CanonicalCode, LoopGraph] = {}
    for parts in _partitions(tau, tau):
        groups = Counter(parts)
        choices = [
            list(combinations_with_replacement(pieces.get(part, ()), count))
            for part, count in sorted(groups.items())
        ]
        for picked in product(*choices):
            components = [g for group in picked for g in group]
            if sum(g.order for g in components) > max_order:
                continue
            union = integer_labels(disjoint_union(components))
            found.setdefault(canonical_code(union), union)
    return _by_code(found)


def tau_critical_graphs(tau: int, max_order: int) -> List[LoopGraph]:
    """All tau-critical loop-free graphs with at most ``max_order`` vertices.

    A graph is tau-critical exactly when each component is, so the graphs
    are assembled as multisets of connected components whose transversal
    numbers sum to ``tau``.
    """
    pieces = {c: connected_tau_critical(c) for c in range(1, tau + 1)}
    return _assemble(pieces, tau, max_order)


def enumerate_forests(tau: int, max_order: int) -> List[LoopGraph]:
    """Forests without isolated vertices, transversal number ``tau``."""
    pieces: Dict[int, List[LoopGraph]] = {}
    for tree in enumerate_trees(max_order):
        if tree.order >= 2:
            pieces.setdefault(transversal_number(tree), []).append(tree)
    return _assemble(pieces, tau, max_order)
