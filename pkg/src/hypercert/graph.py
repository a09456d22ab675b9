"""Finite graphs with loops and their exact transversal number.

A loop ``{v, v}`` is stored as the one-element set ``frozenset({v})``; it is
met only by ``v``. Graph values are immutable and every operation returns a
new graph.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import (
    Any,
    Collection,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx
from networkx.algorithms import isomorphism

from hypercert.errors import GraphError, MissingEdge
from hypercert.logging import get_logger

logger = get_logger(__name__)

Vertex = Hashable
Edge = FrozenSet[Vertex]


def label_key(vertex: Vertex) -> Tuple[int, int, str]:
    """Total order on opaque labels: integers first, then by string form."""
    if isinstance(vertex, int) and not isinstance(vertex, bool):
        return (0, vertex, "")
    return (1, 0, str(vertex))


def edge(u: Vertex, v: Vertex) -> Edge:
    """Build the edge ``{u, v}``; ``edge(v, v)`` is a loop."""
    return frozenset((u, v))


def ends(e: Edge) -> Tuple[Vertex, Vertex]:
    """Endpoints of an edge in label order (a loop repeats its vertex)."""
    ordered = sorted(e, key=label_key)
    if len(ordered) == 1:
        return ordered[0], ordered[0]
    return ordered[0], ordered[1]


def edge_key(e: Edge) -> Tuple[Tuple[int, int, str], ...]:
    """Sort key for edges: lexicographic on the ordered endpoints."""
    return tuple(label_key(v) for v in ends(e))


def format_edge(e: Edge) -> str:
    u, v = ends(e)
    return f"{u}{v}" if isinstance(u, str) and len(str(u)) == 1 else f"{u}-{v}"


def is_loop(e: Edge) -> bool:
    return len(e) == 1


@dataclass(frozen=True)
class LoopGraph:
    """A finite graph that may carry loops.

    Isolated vertices are allowed and kept by every operation that does not
    explicitly delete vertices.
    """

    vertices: FrozenSet[Vertex]
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for e in self.edges:
            if len(e) not in (1, 2):
                raise GraphError(f"Edge {set(e)} must have one or two endpoints")
            if not e <= self.vertices:
                raise GraphError(
                    f"Edge {sorted(e, key=label_key)} has an endpoint outside "
                    "the vertex set"
                )

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Tuple[Vertex, Vertex]],
        vertices: Iterable[Vertex] = (),
    ) -> "LoopGraph":
        """Build a graph from endpoint pairs plus optional extra vertices."""
        edge_set = frozenset(edge(u, v) for u, v in edges)
        vertex_set = frozenset(vertices).union(*edge_set)
        return cls(vertex_set, edge_set)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def loops(self) -> FrozenSet[Vertex]:
        return frozenset(v for e in self.edges if len(e) == 1 for v in e)

    def sorted_vertices(self) -> List[Vertex]:
        return sorted(self.vertices, key=label_key)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges, key=edge_key)

    def proper_edges(self) -> List[Edge]:
        """Non-loop edges in sorted order."""
        return [e for e in self.sorted_edges() if len(e) == 2]

    def neighbors(self, vertex: Vertex) -> FrozenSet[Vertex]:
        return frozenset(
            u for e in self.edges if len(e) == 2 and vertex in e for u in e
        ) - {vertex}

    def degree(self, vertex: Vertex) -> int:
        """Number of edges (loops included) containing ``vertex``."""
        return sum(1 for e in self.edges if vertex in e)

    def has_loop(self, vertex: Vertex) -> bool:
        return frozenset((vertex,)) in self.edges

    def to_networkx(self) -> nx.Graph:
        """Equivalent ``networkx`` graph; loops become self-loops."""
        graph = nx.Graph()
        graph.add_nodes_from(self.sorted_vertices())
        graph.add_edges_from(ends(e) for e in self.sorted_edges())
        return graph

    def __str__(self) -> str:
        edges = ", ".join(format_edge(e) for e in self.sorted_edges())
        return f"LoopGraph(|V|={self.order}, E=[{edges}])"


@dataclass(frozen=True)
class _Bitsets:
    order: Tuple[Vertex, ...]
    index: Dict[Vertex, int]
    adjacency: Tuple[int, ...]
    loops: int


def _bitsets(graph: LoopGraph) -> _Bitsets:
    order = tuple(graph.sorted_vertices())
    index = {v: i for i, v in enumerate(order)}
    adjacency = [0] * len(order)
    loops = 0
    for e in graph.edges:
        u, v = ends(e)
        if u == v:
            loops |= 1 << index[u]
        else:
            adjacency[index[u]] |= 1 << index[v]
            adjacency[index[v]] |= 1 << index[u]
    return _Bitsets(order, index, tuple(adjacency), loops)


def _cover_size(adjacency: Tuple[int, ...], alive: int, memo: Dict[int, int]) -> int:
    """Minimum vertex cover of the loop-free graph induced on ``alive``."""
    cached = memo.get(alive)
    if cached is not None:
        return cached

    best_vertex, best_degree, pendant = -1, 0, -1
    rest = alive
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        degree = (adjacency[v] & alive).bit_count()
        if degree == 1 and pendant < 0:
            pendant = v
        if degree > best_degree:
            best_vertex, best_degree = v, degree

    if best_degree == 0:
        result = 0
    elif pendant >= 0:
        # Some minimum cover uses the neighbour of a degree-one vertex.
        neighbour = adjacency[pendant] & alive
        remaining = alive & ~neighbour & ~(1 << pendant)
        result = 1 + _cover_size(adjacency, remaining, memo)
    else:
        bit = 1 << best_vertex
        neighbours = adjacency[best_vertex] & alive
        with_vertex = 1 + _cover_size(adjacency, alive & ~bit, memo)
        without_vertex = neighbours.bit_count() + _cover_size(
            adjacency, alive & ~bit & ~neighbours, memo
        )
        result = min(with_vertex, without_vertex)

    memo[alive] = result
    return result


def transversal_number(graph: LoopGraph) -> int:
    """Exact minimum size of a vertex set meeting every edge.

    Loops force their vertex; the loop-free remainder is solved by
    branch-and-bound on a maximum-degree vertex (include it, or include all
    of its neighbours) with memoization on the surviving vertex set.
    """
    if not graph.edges:
        return 0
    bits = _bitsets(graph)
    full = (1 << len(bits.order)) - 1
    forced = bits.loops
    return forced.bit_count() + _cover_size(bits.adjacency, full & ~forced, {})


def is_transversal(graph: LoopGraph, vertices: Collection[Vertex]) -> bool:
    chosen = frozenset(vertices)
    return all(e & chosen for e in graph.edges)


def minimum_transversals(graph: LoopGraph) -> List[FrozenSet[Vertex]]:
    """All minimum transversals, in lexicographic order of sorted labels."""
    size = transversal_number(graph)
    candidates = sorted(support(graph), key=label_key)
    return [
        frozenset(combo)
        for combo in combinations(candidates, size)
        if is_transversal(graph, combo)
    ]


def remove_edge(graph: LoopGraph, p: Edge) -> LoopGraph:
    """``G - p``: drop the edge and nothing else."""
    if p not in graph.edges:
        raise MissingEdge(
            f"Edge {format_edge(p)} is not in the graph",
            witness=[str(v) for v in ends(p)],
        )
    return LoopGraph(graph.vertices, graph.edges - {p})


def truncate(graph: LoopGraph, p: Edge) -> LoopGraph:
    """``G \\ p``: delete both endpoints of ``p`` and keep what survives.

    An edge sharing one endpoint with ``p`` becomes a loop at its other end;
    edges inside ``p`` vanish. Collapsed duplicates merge.
    """
    if p not in graph.edges:
        raise MissingEdge(
            f"Edge {format_edge(p)} is not in the graph",
            witness=[str(v) for v in ends(p)],
        )
    if is_loop(p):
        raise GraphError(f"Cannot truncate along the loop {format_edge(p)}")
    surviving = frozenset(e - p for e in graph.edges if e != p and e - p)
    return LoopGraph(graph.vertices - p, surviving)


def support(graph: LoopGraph) -> FrozenSet[Vertex]:
    """Union of all edge endpoints."""
    return frozenset().union(*graph.edges)


def isolated_vertices(graph: LoopGraph) -> FrozenSet[Vertex]:
    return graph.vertices - support(graph)


def without_isolated(graph: LoopGraph) -> LoopGraph:
    return LoopGraph(support(graph), graph.edges)


def is_tau_critical(graph: LoopGraph) -> bool:
    """No isolated vertex, and deleting any edge lowers the transversal number."""
    if isolated_vertices(graph):
        return False
    tau = transversal_number(graph)
    return all(
        transversal_number(remove_edge(graph, e)) == tau - 1 for e in graph.edges
    )


def contains_subgraph(graph: LoopGraph, pattern: LoopGraph) -> bool:
    """Whether ``graph`` has a (not necessarily induced) copy of ``pattern``."""
    if pattern.loops:
        raise GraphError("Subgraph patterns must be loop-free")
    if pattern.order > graph.order or pattern.size > graph.size:
        return False
    host = graph.to_networkx()
    host.remove_edges_from(list(nx.selfloop_edges(host)))
    matcher = isomorphism.GraphMatcher(host, pattern.to_networkx())
    return bool(matcher.subgraph_is_monomorphic())


def is_forest(graph: LoopGraph) -> bool:
    if graph.loops:
        return False
    return graph.order == 0 or bool(nx.is_forest(graph.to_networkx()))


def is_connected(graph: LoopGraph) -> bool:
    return graph.order > 0 and bool(nx.is_connected(graph.to_networkx()))


def relabel(graph: LoopGraph, mapping: Mapping[Vertex, Vertex]) -> LoopGraph:
    """Rename vertices; ``mapping`` must be injective on the vertex set."""
    images = {v: mapping.get(v, v) for v in graph.vertices}
    if len(set(images.values())) != len(images):
        raise GraphError("Relabelling must be injective")
    return LoopGraph(
        frozenset(images.values()),
        frozenset(frozenset(images[v] for v in e) for e in graph.edges),
    )


def integer_labels(graph: LoopGraph) -> LoopGraph:
    """Relabel to ``0..n-1`` following the label order."""
    return relabel(graph, {v: i for i, v in enumerate(graph.sorted_vertices())})


def disjoint_union(graphs: Sequence[LoopGraph]) -> LoopGraph:
    """Disjoint union; vertex ``v`` of the i-th graph becomes ``"i.v"``."""
    vertices: List[str] = []
    edges: List[Edge] = []
    for position, g in enumerate(graphs):
        names = {v: f"{position}.{v}" for v in g.vertices}
        vertices.extend(names.values())
        edges.extend(frozenset(names[v] for v in e) for e in g.edges)
    return LoopGraph(frozenset(vertices), frozenset(edges))


def fresh_label(base: str, taken: Collection[Any]) -> str:
    """``base`` itself, or ``base_2``, ``base_3`` ... whichever is free first."""
    if base not in taken:
        return base
    suffix = 2
    while f"{base}_{suffix}" in taken:
        suffix += 1
    return f"{base}_{suffix}"


# Named graphs


def _labels(count: int, labels: Optional[Sequence[Vertex]]) -> Sequence[Vertex]:
    if labels is None:
        return list(range(count))
    if len(labels) != count or len(set(labels)) != count:
        raise GraphError(f"Expected {count} distinct labels")
    return labels


def empty_graph(n: int, labels: Optional[Sequence[Vertex]] = None) -> LoopGraph:
    return LoopGraph(frozenset(_labels(n, labels)))


def complete_graph(n: int, labels: Optional[Sequence[Vertex]] = None) -> LoopGraph:
    names = _labels(n, labels)
    return LoopGraph.from_edges(combinations(names, 2), names)


def cycle_graph(n: int, labels: Optional[Sequence[Vertex]] = None) -> LoopGraph:
    names = _labels(n, labels)
    return LoopGraph.from_edges(
        ((names[i], names[(i + 1) % n]) for i in range(n)), names
    )


def path_graph(n: int, labels: Optional[Sequence[Vertex]] = None) -> LoopGraph:
    names = _labels(n, labels)
    return LoopGraph.from_edges(((names[i], names[i + 1]) for i in range(n - 1)), names)


def star_graph(leaves: int, labels: Optional[Sequence[Vertex]] = None) -> LoopGraph:
    """``K_{1,leaves}``; the first label is the centre."""
    names = _labels(leaves + 1, labels)
    return LoopGraph.from_edges(((names[0], leaf) for leaf in names[1:]), names)


def matching_graph(k: int) -> LoopGraph:
    """``k K_2`` on ``0..2k-1``."""
    return LoopGraph.from_edges((2 * i, 2 * i + 1) for i in range(k))


def _component_name(component: LoopGraph) -> str:
    n, size = component.order, component.size
    degrees = sorted(component.degree(v) for v in component.vertices)
    if component.loops:
        return f"L{n}.{size}"
    if n == 2 and size == 1:
        return "K2"
    if n == 3 and size == 3:
        return "C3"
    if size == n * (n - 1) // 2:
        return f"K{n}"
    if size == n and degrees == [2] * n:
        return f"C{n}"
    if size == n - 1 and degrees[-1] == n - 1:
        return f"K1,{n - 1}"
    if size == n - 1 and degrees[-1] <= 2:
        return f"P{n}"
    return f"G{n}.{size}"


def graph_name(graph: LoopGraph) -> str:
    """Readable name such as ``3K2``, ``K2+C3`` or ``C5``.

    Components are named individually (complete graphs, cycles, paths and
    stars get their usual names) and listed by order; isolated vertices
    count as ``K1``.
    """
    if graph.order == 0:
        return "empty"
    host = graph.to_networkx()
    counts: Dict[Tuple[int, str], int] = {}
    for nodes in nx.connected_components(host):
        component = LoopGraph(
            frozenset(nodes), frozenset(e for e in graph.edges if e <= nodes)
        )
        if component.order == 1 and not component.edges:
            name = "K1"
        else:
            name = _component_name(component)
        key = (component.order, name)
        counts[key] = counts.get(key, 0) + 1
    parts = [
        f"{count}{name}" if count > 1 else name
        for (_, name), count in sorted(counts.items())
    ]
    return "+".join(parts)
