"""Canonical codes for loop graphs.

Colour refinement followed by individualization of one vertex at a time
from the first smallest non-singleton cell. Every discrete colouring yields
a candidate code; the smallest candidate is the canonical code. Branches on
twin vertices are skipped because swapping twins is an automorphism that
fixes the current colouring.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from hypercert.graph import LoopGraph, Vertex, ends, relabel


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism invariant that is also complete: equal codes, isomorphic graphs.

    ``loops`` and ``rows`` describe the graph in canonical vertex order;
    ``rows[i]`` is the neighbour bitmask of the i-th vertex.
    """

    order: int
    size: int
    loops: Tuple[bool, ...]
    rows: Tuple[int, ...]

    def hexdigest(self) -> str:
        """Short printable form used in logs and certificates."""
        loop_bits = sum(1 << i for i, flag in enumerate(self.loops) if flag)
        body = ".".join(format(row, "x") for row in self.rows)
        return f"n{self.order}e{self.size}l{loop_bits:x}:{body}"


@dataclass
class _Search:
    neighbours: List[List[int]]
    loops: List[bool]
    size: int
    best: Optional[CanonicalCode] = None
    best_order: Optional[Tuple[int, ...]] = None


def _refine(colours: Sequence[int], search: _Search) -> List[int]:
    current = list(colours)
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in search.neighbours[v])))
            for v in range(len(current))
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(current)):
            return refined
        current = refined


def _are_twins(u: int, v: int, search: _Search) -> bool:
    if search.loops[u] != search.loops[v]:
        return False
    return set(search.neighbours[u]) - {v} == set(search.neighbours[v]) - {u}


def _leaf(colours: Sequence[int], search: _Search) -> None:
    order = sorted(range(len(colours)), key=lambda v: colours[v])
    position = {v: i for i, v in enumerate(order)}
    rows = tuple(
        sum(1 << position[u] for u in search.neighbours[v]) for v in order
    )
    code = CanonicalCode(
        len(order), search.size, tuple(search.loops[v] for v in order), rows
    )
    if search.best is None or code < search.best:
        search.best = code
        search.best_order = tuple(order)


def _explore(colours: List[int], search: _Search) -> None:
    cells: Dict[int, List[int]] = {}
    for v, colour in enumerate(colours):
        cells.setdefault(colour, []).append(v)
    open_cells = [cell for cell in cells.values() if len(cell) > 1]
    if not open_cells:
        _leaf(colours, search)
        return

    target = min(open_cells, key=lambda cell: (len(cell), colours[cell[0]]))
    representatives: List[int] = []
    for v in target:
        if any(_are_twins(v, r, search) for r in representatives):
            continue
        representatives.append(v)
        child = [2 * c for c in colours]
        child[v] -= 1
        _explore(_refine(child, search), search)


def _canonical_search(graph: LoopGraph) -> Tuple[CanonicalCode, List[Vertex]]:
    vertices = graph.sorted_vertices()
    index = {v: i for i, v in enumerate(vertices)}
    neighbours: List[List[int]] = [[] for _ in vertices]
    loops = [False] * len(vertices)
    for e in graph.edges:
        u, v = ends(e)
        if u == v:
            loops[index[u]] = True
        else:
            neighbours[index[u]].append(index[v])
            neighbours[index[v]].append(index[u])

    search = _Search(neighbours, loops, graph.size)
    start = [
        (1 if loops[v] else 0) + 2 * len(neighbours[v]) for v in range(len(vertices))
    ]
    _explore(_refine(start, search), search)

    if search.best is None or search.best_order is None:
        return CanonicalCode(0, 0, (), ()), []
    return search.best, [vertices[i] for i in search.best_order]


def canonical_code(graph: LoopGraph) -> CanonicalCode:
    """Canonical code of ``graph``; equal exactly for isomorphic loop graphs."""
    return _canonical_search(graph)[0]


def canonical_labeling(graph: LoopGraph) -> List[Vertex]:
    """Vertices of ``graph`` listed in canonical order."""
    return _canonical_search(graph)[1]


def canonical_form(graph: LoopGraph) -> LoopGraph:
    """Isomorphic copy of ``graph`` on ``0..n-1`` in canonical order."""
    order = canonical_labeling(graph)
    return relabel(graph, {v: i for i, v in enumerate(order)})


def is_isomorphic(first: LoopGraph, second: LoopGraph) -> bool:
    if (first.order, first.size) != (second.order, second.size):
        return False
    return canonical_code(first) == canonical_code(second)
