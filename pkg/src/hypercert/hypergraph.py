"""3-uniform hypergraphs, their cliques and clique families."""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import (
    Collection,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx

from hypercert.errors import CliqueLimitExceeded, FamilyError
from hypercert.graph import Vertex, label_key
from hypercert.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CLIQUE_LIMIT = 1_000_000

Triple = FrozenSet[Vertex]


def sorted_labels(vertices: Iterable[Vertex]) -> List[Vertex]:
    return sorted(vertices, key=label_key)


def set_key(vertices: Iterable[Vertex]) -> Tuple[Tuple[int, int, str], ...]:
    """Sort key for vertex sets: lexicographic on their sorted labels."""
    return tuple(label_key(v) for v in sorted_labels(vertices))


@dataclass(frozen=True)
class Hypergraph3:
    """A 3-uniform hypergraph ``H = (V, E)``."""

    vertices: FrozenSet[Vertex]
    triples: FrozenSet[Triple] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for triple in self.triples:
            if len(triple) != 3:
                raise FamilyError(f"{sorted_labels(triple)} is not a triple")
            if not triple <= self.vertices:
                raise FamilyError(
                    f"Triple {sorted_labels(triple)} leaves the vertex set"
                )

    @classmethod
    def from_triples(
        cls,
        triples: Iterable[Tuple[Vertex, Vertex, Vertex]],
        vertices: Iterable[Vertex] = (),
    ) -> "Hypergraph3":
        triple_set = frozenset(frozenset(t) for t in triples)
        return cls(frozenset(vertices).union(*triple_set), triple_set)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.triples)

    def sorted_vertices(self) -> List[Vertex]:
        return sorted_labels(self.vertices)

    def sorted_triples(self) -> List[Triple]:
        return sorted(self.triples, key=set_key)

    def incidence_graph(self) -> nx.Graph:
        """Bipartite vertex/triple incidence graph, tagged by ``kind``."""
        graph = nx.Graph()
        for v in self.sorted_vertices():
            graph.add_node(("v", v), kind="vertex")
        for triple in self.sorted_triples():
            node = ("t", tuple(sorted_labels(triple)))
            graph.add_node(node, kind="triple")
            graph.add_edges_from((node, ("v", v)) for v in triple)
        return graph


@dataclass(frozen=True)
class CliqueFamily:
    """An indexed family ``N_1..N_l`` of distinct vertex subsets of ``ground``."""

    ground: FrozenSet[Vertex]
    members: Tuple[FrozenSet[Vertex], ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise FamilyError("A clique family needs at least one member")
        if len(set(self.members)) != len(self.members):
            raise FamilyError("Clique family members must be pairwise distinct")
        for index, member in enumerate(self.members, start=1):
            if not member <= self.ground:
                raise FamilyError(f"Member N_{index} is not inside the ground set")

    @classmethod
    def of(
        cls, members: Iterable[Collection[Vertex]], ground: Iterable[Vertex] = ()
    ) -> "CliqueFamily":
        frozen = tuple(frozenset(m) for m in members)
        return cls(frozenset(ground).union(*frozen), frozen)

    def __len__(self) -> int:
        return len(self.members)

    def sizes(self) -> List[int]:
        return [len(m) for m in self.members]

    def sorted_members(self) -> List[FrozenSet[Vertex]]:
        return sorted(self.members, key=set_key)


def is_clique(hypergraph: Hypergraph3, vertices: Collection[Vertex]) -> bool:
    """Every 3-subset is a triple; sets of at most two vertices always are."""
    chosen = frozenset(vertices)
    if not chosen <= hypergraph.vertices:
        raise FamilyError("Clique test on vertices outside the hypergraph")
    return all(frozenset(t) in hypergraph.triples for t in combinations(chosen, 3))


class _Links:
    """Bitset view: ``link[u][v]`` holds every ``w`` with ``{u, v, w}`` a triple."""

    def __init__(self, hypergraph: Hypergraph3) -> None:
        self.order = hypergraph.sorted_vertices()
        index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        self.link = [[0] * n for _ in range(n)]
        self.triple_degree = [0] * n
        for triple in hypergraph.triples:
            a, b, c = (index[v] for v in triple)
            for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
                self.link[u][v] |= 1 << w
                self.link[v][u] |= 1 << w
            for u in (a, b, c):
                self.triple_degree[u] += 1

    def members(self, mask: int) -> FrozenSet[Vertex]:
        return frozenset(v for i, v in enumerate(self.order) if mask >> i & 1)

    def search(self, size: int, limit: Optional[int] = None) -> List[int]:
        """Masks of all cliques with exactly ``size`` vertices (``size >= 3``).

        A vertex of such a clique lies in at least ``C(size-1, 2)`` triples,
        which prunes the starting candidates. Stops after ``limit`` hits.
        """
        needed = comb(size - 1, 2)
        start = 0
        for i, degree in enumerate(self.triple_degree):
            if degree >= needed:
                start |= 1 << i
        found: List[int] = []

        def extend(chosen: List[int], mask: int, candidates: int) -> bool:
            if len(chosen) == size:
                found.append(mask)
                return limit is not None and len(found) >= limit
            if len(chosen) + candidates.bit_count() < size:
                return False
            while candidates:
                low = candidates & -candidates
                v = low.bit_length() - 1
                candidates ^= low
                narrowed = candidates
                for u in chosen:
                    narrowed &= self.link[u][v]
                chosen.append(v)
                stop = extend(chosen, mask | low, narrowed)
                chosen.pop()
                if stop:
                    return True
                if len(chosen) + candidates.bit_count() < size:
                    return False
            return False

        extend([], 0, start)
        return found


def find_clique(hypergraph: Hypergraph3, size: int) -> Optional[FrozenSet[Vertex]]:
    """Lexicographically first clique of exactly ``size`` vertices, if any."""
    if size > hypergraph.order:
        return None
    if size <= 2:
        return frozenset(hypergraph.sorted_vertices()[:size])
    links = _Links(hypergraph)
    hits = links.search(size, limit=1)
    return links.members(hits[0]) if hits else None


def clique_number(hypergraph: Hypergraph3) -> int:
    """Exact clique number, scanning candidate sizes downward from ``n``."""
    links = _Links(hypergraph)
    for size in range(hypergraph.order, 2, -1):
        if links.search(size, limit=1):
            logger.debug(f"clique number {size} on {hypergraph.order} vertices")
            return size
    return min(hypergraph.order, 2)


def maximum_cliques(
    hypergraph: Hypergraph3, limit: int = DEFAULT_CLIQUE_LIMIT
) -> CliqueFamily:
    """Every clique of size ``omega(H)``, each once, sorted by labels.

    Raises:
        CliqueLimitExceeded: More than ``limit`` maximum cliques exist
    """
    omega = clique_number(hypergraph)
    if omega <= 2:
        if comb(hypergraph.order, omega) > limit:
            raise CliqueLimitExceeded(f"More than {limit} maximum cliques")
        cliques = [
            frozenset(c) for c in combinations(hypergraph.sorted_vertices(), omega)
        ]
    else:
        links = _Links(hypergraph)
        masks = links.search(omega, limit=limit + 1)
        if len(masks) > limit:
            raise CliqueLimitExceeded(f"More than {limit} maximum cliques")
        cliques = [links.members(mask) for mask in masks]
    return CliqueFamily(hypergraph.vertices, tuple(sorted(cliques, key=set_key)))


def family_intersection(family: CliqueFamily) -> FrozenSet[Vertex]:
    return frozenset.intersection(*family.members)


def from_clique_family(
    vertices: Iterable[Vertex],
    family: Union[CliqueFamily, Sequence[Collection[Vertex]]],
) -> Hypergraph3:
    """Hypergraph whose triples are exactly those inside some member."""
    ground = frozenset(vertices)
    members = family.members if isinstance(family, CliqueFamily) else family
    triples = set()
    for member in members:
        if not frozenset(member) <= ground:
            raise FamilyError("Family member is not inside the vertex set")
        triples.update(frozenset(t) for t in combinations(member, 3))
    return Hypergraph3(ground, frozenset(triples))


def is_isomorphic(first: Hypergraph3, second: Hypergraph3) -> bool:
    """Hypergraph isomorphism through the incidence graphs."""
    if (first.order, first.size) != (second.order, second.size):
        return False
    return bool(
        nx.is_isomorphic(
            first.incidence_graph(),
            second.incidence_graph(),
            node_match=lambda a, b: a["kind"] == b["kind"],
        )
    )
