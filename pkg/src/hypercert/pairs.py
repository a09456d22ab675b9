"""Private pairs and the intersecting (2,m)-system of a clique family."""

from dataclasses import dataclass
from itertools import combinations
from typing import Collection, FrozenSet, List, Optional, Sequence, Tuple

from hypercert.errors import (
    BoundViolation,
    DegenerateFamily,
    FamilyError,
    NonUniformFamily,
    NoPrivatePair,
    NotEmptyIntersection,
)
from hypercert.graph import (
    Edge,
    LoopGraph,
    Vertex,
    edge_key,
    ends,
    label_key,
    transversal_number,
    truncate,
)
from hypercert.hypergraph import (
    CliqueFamily,
    Hypergraph3,
    clique_number,
    family_intersection,
    is_clique,
    sorted_labels,
)
from hypercert.logging import get_logger

logger = get_logger(__name__)


def law_violations(
    pairs: Sequence[Edge], complements: Sequence[FrozenSet[Vertex]]
) -> List[Tuple[int, int]]:
    """Index pairs ``(i, j)`` (1-based) where ``p_i`` meets ``M_j`` wrongly.

    The law asks ``p_i`` to miss ``M_j`` exactly when ``i == j``.
    """
    broken = []
    for i, pair in enumerate(pairs, start=1):
        for j, complement in enumerate(complements, start=1):
            if bool(pair & complement) == (i == j):
                broken.append((i, j))
    return broken


@dataclass(frozen=True)
class PairSystem:
    """An intersecting (2,m)-system ``(p_i, M_i)`` on the ground set ``V``."""

    ground: FrozenSet[Vertex]
    m: int
    pairs: Tuple[Edge, ...]
    complements: Tuple[FrozenSet[Vertex], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.complements):
            raise FamilyError("Every pair needs exactly one complement")
        if len(set(self.pairs)) != len(self.pairs):
            raise FamilyError("Private pairs must be pairwise distinct")
        for index, (pair, complement) in enumerate(
            zip(self.pairs, self.complements), start=1
        ):
            if len(pair) != 2 or not pair <= self.ground:
                raise FamilyError(f"p_{index} is not a 2-subset of the ground set")
            if len(complement) != self.m or not complement <= self.ground:
                raise NonUniformFamily(
                    f"M_{index} is not an {self.m}-subset of the ground set",
                    witness={"index": index, "size": len(complement)},
                )
        broken = law_violations(self.pairs, self.complements)
        if broken:
            raise FamilyError(
                f"(2,{self.m})-system law fails at {len(broken)} index pairs",
                witness=[list(p) for p in broken],
            )
        if self.pairs and frozenset().union(*self.complements) != self.ground:
            raise FamilyError("The complements do not cover the ground set")
        for index, tau in enumerate(self.truncated_transversals(), start=1):
            if tau > self.m:
                raise BoundViolation(
                    f"tau(G \\ p_{index}) = {tau} exceeds m = {self.m}",
                    witness={"index": index, "tau": tau, "m": self.m},
                )

    def __len__(self) -> int:
        return len(self.pairs)

    def truncated_transversals(self) -> List[int]:
        """``tau(G \\ p_j)`` for each pair.

        ``M_j`` meets every edge of ``G \\ p_j``, so each value is at most ``m``.
        """
        graph = LoopGraph(self.ground, frozenset(self.pairs))
        return [transversal_number(truncate(graph, pair)) for pair in self.pairs]

    @property
    def members(self) -> Tuple[FrozenSet[Vertex], ...]:
        """The cliques ``N_i = V - M_i``."""
        return tuple(self.ground - complement for complement in self.complements)

    def family(self) -> CliqueFamily:
        return CliqueFamily(self.ground, self.members)


def irredundant_subfamily(family: CliqueFamily) -> CliqueFamily:
    """Greedy index-order removal down to an irredundant subfamily.

    Raises:
        NotEmptyIntersection: The whole family shares a vertex
        DegenerateFamily: Fewer than three members remain
    """
    common = family_intersection(family)
    if common:
        raise NotEmptyIntersection(
            f"The family members share {len(common)} vertices",
            witness=[str(v) for v in sorted_labels(common)],
        )

    kept = list(family.members)
    for member in family.members:
        trial = [other for other in kept if other != member]
        if trial and not frozenset.intersection(*trial):
            kept = trial

    for member in kept:
        rest = [other for other in kept if other != member]
        if rest and not frozenset.intersection(*rest):
            raise FamilyError("Greedy reduction left a redundant member")

    if len(kept) < 3:
        raise DegenerateFamily(
            f"Irredundant subfamily has only {len(kept)} members",
            witness=[[str(v) for v in sorted_labels(m)] for m in kept],
        )
    logger.debug(f"irredundant subfamily: {len(kept)} of {len(family)} members")
    return CliqueFamily(family.ground, tuple(kept))


def private_pair_choices(family: CliqueFamily) -> List[List[Edge]]:
    """For each member, every 2-subset contained in no other member."""
    choices = []
    for i, member in enumerate(family.members):
        others = [other for j, other in enumerate(family.members) if j != i]
        choices.append(
            [
                frozenset(pair)
                for pair in combinations(sorted_labels(member), 2)
                if not any(frozenset(pair) <= other for other in others)
            ]
        )
    return choices


def private_pairs(
    family: CliqueFamily, hypergraph: Optional[Hypergraph3] = None
) -> List[Edge]:
    """Lexicographically least private pair of each member.

    When ``hypergraph`` is given, every member is also checked to be a clique
    of size ``omega(H)``.

    Raises:
        NoPrivatePair: Some member has no private pair
    """
    if hypergraph is not None:
        omega = clique_number(hypergraph)
        for index, member in enumerate(family.members, start=1):
            if len(member) != omega or not is_clique(hypergraph, member):
                raise FamilyError(f"N_{index} is not a maximum clique of H")

    chosen = []
    for index, options in enumerate(private_pair_choices(family), start=1):
        if not options:
            member = family.members[index - 1]
            raise NoPrivatePair(
                f"N_{index} has no private pair",
                witness={
                    "index": index,
                    "member": [str(v) for v in sorted_labels(member)],
                },
            )
        chosen.append(min(options, key=edge_key))
    return chosen


def build_system(
    ground: Collection[Vertex], family: CliqueFamily, pairs: Sequence[Edge]
) -> PairSystem:
    """``M_i = V - N_i`` alongside the private pairs.

    Raises:
        NonUniformFamily: The complements differ in size
    """
    vertices = frozenset(ground)
    complements = tuple(vertices - member for member in family.members)
    sizes = sorted({len(c) for c in complements})
    if len(sizes) != 1:
        raise NonUniformFamily(
            f"Complement sizes differ: {sizes}",
            witness=[len(c) for c in complements],
        )
    return PairSystem(vertices, sizes[0], tuple(pairs), complements)


def pairs_graph(system: PairSystem) -> LoopGraph:
    """The private-pairs graph on the whole ground set."""
    return LoopGraph(system.ground, frozenset(system.pairs))


def describe_pair(pair: Edge) -> List[str]:
    return [str(v) for v in ends(pair)]


def describe_set(vertices: Collection[Vertex]) -> List[str]:
    return [str(v) for v in sorted(vertices, key=label_key)]
