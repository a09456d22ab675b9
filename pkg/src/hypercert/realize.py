"""Realizations of weighted candidates and the extremal hypergraph.

A realization turns a weighted private-pairs graph back into a pair system,
its clique family and the hypergraph of all triples forced by that family.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from math import comb
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

from hypercert.cases import CaseCandidate
from hypercert.errors import Infeasible, PreconditionFailed, VerificationFailure
from hypercert.graph import (
    Edge,
    Vertex,
    edge,
    fresh_label,
    graph_name,
    minimum_transversals,
    truncate,
)
from hypercert.hypergraph import (
    CliqueFamily,
    Hypergraph3,
    clique_number,
    family_intersection,
    find_clique,
    from_clique_family,
    is_clique,
    is_isomorphic,
    maximum_cliques,
    sorted_labels,
)
from hypercert.logging import get_logger
from hypercert.pairs import (
    PairSystem,
    build_system,
    describe_pair,
    describe_set,
    irredundant_subfamily,
    pairs_graph,
    private_pair_choices,
    private_pairs,
)
from hypercert.weights import WeightedContext, order_bound, weighted_context

logger = get_logger(__name__)

PAIRINGS = ("cyclic", "complete")
EXTREMAL_X = 10
EXTREMAL_Y = 5


@dataclass(frozen=True)
class Realization:
    """A pair system together with its clique family and forced hypergraph."""

    system: PairSystem
    hypergraph: Hypergraph3
    family: CliqueFamily
    k: int

    @property
    def order(self) -> int:
        return len(self.system.ground)

    def pairs_bound(self) -> int:
        """Order bound of the private-pairs graph; ``order`` never exceeds it."""
        context = weighted_context(pairs_graph(self.system), self.system.m)
        return order_bound(context)

    @property
    def within_order_bound(self) -> bool:
        return self.order <= self.pairs_bound()


def _from_system(system: PairSystem) -> Realization:
    family = system.family()
    return Realization(
        system=system,
        hypergraph=from_clique_family(system.ground, family),
        family=family,
        k=len(system.ground) - system.m,
    )


def fresh_vertices(
    edges: Sequence[Edge], weights: Dict[Edge, int], taken: Set[Any]
) -> List[List[str]]:
    """Labels ``i, i', i'', ...`` for the outside vertices of the i-th edge."""
    names: List[List[str]] = []
    used = set(taken)
    for index, e in enumerate(edges, start=1):
        block = []
        for prime in range(weights[e]):
            label = fresh_label(f"{index}" + "'" * prime, used)
            used.add(label)
            block.append(label)
        names.append(block)
    return names


def realize_context(context: WeightedContext, target_n: int) -> List[Realization]:
    """Every system that realizes ``context`` on its order bound.

    At the bound each ``M_i`` holds exactly ``w(p_i)`` private outside
    vertices, and its part inside ``V_0`` is a minimum transversal of
    ``G \\ p_i``. Below the bound outside vertices may be shared between
    several ``M_i`` and nothing is forced, so such targets are refused.

    Raises:
        Infeasible: ``target_n`` is above the bound, or nothing fits
        PreconditionFailed: ``target_n`` is below the bound
    """
    bound = order_bound(context)
    if target_n > bound:
        raise Infeasible(
            f"Order {target_n} exceeds the bound {bound}",
            witness={"bound": bound, "target": target_n},
        )
    if target_n < bound:
        raise PreconditionFailed(
            f"Forced realization needs the target to equal the bound {bound}",
            witness={"bound": bound, "target": target_n},
        )

    graph = context.graph
    edges = graph.sorted_edges()
    inside = frozenset().union(*edges)
    outside = fresh_vertices(edges, context.weights, set(graph.vertices))
    ground = inside | frozenset(label for block in outside for label in block)

    options = [minimum_transversals(truncate(graph, e)) for e in edges]
    found: List[Realization] = []
    for choice in product(*options):
        if not inside <= frozenset().union(*choice):
            continue
        complements = tuple(
            part | frozenset(block) for part, block in zip(choice, outside)
        )
        system = PairSystem(ground, context.m, tuple(edges), complements)
        found.append(_from_system(system))

    if not found:
        raise Infeasible(
            f"No system realizes {graph_name(graph)} on {target_n} vertices"
        )
    logger.debug(f"{graph_name(graph)}: {len(found)} realizations at n={target_n}")
    return found


def forced_realization(candidate: CaseCandidate, target_n: int) -> List[Realization]:
    return realize_context(candidate.context(), target_n)


class Verdict(str, Enum):
    PASS = "PASS"
    REJECT = "REJECT"


@dataclass(frozen=True)
class TriplesVerdict:
    verdict: Verdict
    k: int
    forced_triples: int
    witness: Optional[FrozenSet[Vertex]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "k": self.k,
            "forced_triples": self.forced_triples,
            "witness": (
                None
                if self.witness is None
                else [str(v) for v in sorted_labels(self.witness)]
            ),
        }


def forcing_member(
    realization: Realization, triple: FrozenSet[Vertex]
) -> Optional[int]:
    """Index (1-based) of some ``M_i`` the triple avoids."""
    for index, complement in enumerate(realization.system.complements, start=1):
        if not triple & complement:
            return index
    return None


def triples_test(realization: Realization) -> TriplesVerdict:
    """Look for ``k + 1`` vertices all of whose triples are forced.

    A triple missing some ``M_i`` lies in ``N_i`` and must be an edge; a
    forced clique on ``k + 1`` vertices contradicts ``omega = k``.
    """
    closure = from_clique_family(realization.system.ground, realization.family)
    if any(not complement for complement in realization.system.complements):
        return TriplesVerdict(
            Verdict.REJECT, realization.k, closure.size, realization.system.ground
        )
    witness = find_clique(closure, realization.k + 1)
    if witness is None:
        return TriplesVerdict(Verdict.PASS, realization.k, closure.size)
    return TriplesVerdict(Verdict.REJECT, realization.k, closure.size, witness)


def witness_holds(realization: Realization, witness: FrozenSet[Vertex]) -> bool:
    """Independent re-check: every triple of the witness avoids some ``M_i``."""
    return all(
        forcing_member(realization, frozenset(t)) is not None
        for t in combinations(witness, 3)
    )


# The extremal construction


def extremal_pairs(pairing: str = "cyclic") -> List[Edge]:
    """The ten pairs on ``Y = {y1..y5}``.

    ``cyclic`` repeats the five consecutive pairs ``{y_i, y_i+1}``;
    ``complete`` takes all ten pairs of ``Y`` in lexicographic order.
    """
    ys = [f"y{j}" for j in range(1, EXTREMAL_Y + 1)]
    if pairing == "cyclic":
        return [
            edge(ys[i % EXTREMAL_Y], ys[(i + 1) % EXTREMAL_Y])
            for i in range(EXTREMAL_X)
        ]
    if pairing == "complete":
        return [edge(a, b) for a, b in combinations(ys, 2)]
    raise PreconditionFailed(f"Unknown pairing {pairing!r}; use one of {PAIRINGS}")


def extremal_construct(pairing: str = "cyclic") -> Tuple[Hypergraph3, CliqueFamily]:
    """``N_i = (X - {x_i}) + p_i`` on ``X + Y``, with all triples inside some N_i."""
    xs = [f"x{i}" for i in range(1, EXTREMAL_X + 1)]
    ys = [f"y{j}" for j in range(1, EXTREMAL_Y + 1)]
    ground = frozenset(xs) | frozenset(ys)
    members = tuple(
        (frozenset(xs) - {xs[i]}) | pair
        for i, pair in enumerate(extremal_pairs(pairing))
    )
    family = CliqueFamily(ground, members)
    return from_clique_family(ground, family), family


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    computed: Any

    @property
    def holds(self) -> bool:
        return bool(self.expected == self.computed)


@dataclass(frozen=True)
class PairPrivacy:
    index: int
    pair: Edge
    pair_is_private: bool
    private_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "pair": [str(v) for v in sorted_labels(self.pair)],
            "pair_is_private": self.pair_is_private,
            "private_count": self.private_count,
        }


@dataclass(frozen=True)
class ExtremalReport:
    order: int
    omega: int
    maximum_cliques: CliqueFamily
    family: CliqueFamily
    checks: Tuple[Check, ...]
    privacy: Tuple[PairPrivacy, ...] = ()

    @property
    def failed(self) -> List[Check]:
        return [check for check in self.checks if not check.holds]


def pair_privacy(family: CliqueFamily, pairs: Sequence[Edge]) -> List[PairPrivacy]:
    """Whether each ``p_i`` is private to ``N_i`` and how many private pairs exist."""
    choices = private_pair_choices(family)
    return [
        PairPrivacy(index, pair, pair in choices[index - 1], len(choices[index - 1]))
        for index, pair in enumerate(pairs, start=1)
    ]


def extremal_verify(
    hypergraph: Hypergraph3,
    family: CliqueFamily,
    pairs: Optional[Sequence[Edge]] = None,
    strict: bool = False,
) -> ExtremalReport:
    """Check order, clique number and the maximum cliques against ``family``.

    Raises:
        VerificationFailure: ``strict`` is set and some check fails
    """
    n = hypergraph.order
    k = max(family.sizes())
    omega = clique_number(hypergraph)
    cliques = maximum_cliques(hypergraph)
    checks = (
        Check("order", comb(EXTREMAL_Y + 1, 2), n),
        Check("clique_number", k, omega),
        Check(
            "family_members_are_cliques",
            True,
            all(is_clique(hypergraph, member) for member in family.members),
        ),
        Check("family_intersection_empty", True, not family_intersection(family)),
        Check(
            "maximum_cliques_intersection_empty",
            True,
            not family_intersection(cliques),
        ),
        Check("maximum_clique_count", len(family), len(cliques)),
        Check(
            "maximum_cliques_equal_family",
            True,
            set(cliques.members) == set(family.members),
        ),
    )
    privacy = tuple(pair_privacy(family, pairs)) if pairs is not None else ()
    report = ExtremalReport(n, omega, cliques, family, checks, privacy)
    if strict and report.failed:
        first = report.failed[0]
        raise VerificationFailure(
            f"Claim {first.name} failed: expected {first.expected}, "
            f"computed {first.computed}",
            witness={"claim": first.name},
        )
    return report


def realization_from_hypergraph(hypergraph: Hypergraph3) -> Realization:
    """System of the irredundant maximum-clique subfamily of ``hypergraph``."""
    cliques = maximum_cliques(hypergraph)
    family = irredundant_subfamily(cliques)
    pairs = private_pairs(family)
    system = build_system(hypergraph.vertices, family, pairs)
    return Realization(system, hypergraph, family, len(hypergraph.vertices) - system.m)


@dataclass(frozen=True)
class UniquenessEntry:
    source: str
    realization: Realization
    verdict: TriplesVerdict
    matches: Dict[str, bool]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "verdict": self.verdict.to_dict(),
            "isomorphic_to": dict(sorted(self.matches.items())),
        }


@dataclass(frozen=True)
class UniquenessReport:
    target_n: int
    entries: Tuple[UniquenessEntry, ...]

    @property
    def passing(self) -> List[UniquenessEntry]:
        return [e for e in self.entries if e.verdict.verdict is Verdict.PASS]

    def unique_reading(self) -> Optional[str]:
        """The pairing matched by the single passing realization, if any."""
        if len(self.passing) != 1:
            return None
        matched = [name for name, ok in self.passing[0].matches.items() if ok]
        return matched[0] if len(matched) == 1 else None


def uniqueness_check(
    sources: Sequence[Tuple[str, WeightedContext]], target_n: int
) -> UniquenessReport:
    """Realize every source at ``target_n`` and compare the survivors.

    Each realization passing the triples test is compared with both
    readings of the extremal construction by hypergraph isomorphism.
    """
    constructions = {name: extremal_construct(name)[0] for name in PAIRINGS}
    entries = []
    for name, context in sources:
        if order_bound(context) != target_n:
            continue
        try:
            realizations = realize_context(context, target_n)
        except Infeasible:
            logger.debug(f"{name}: no system on {target_n} vertices")
            continue
        for realization in realizations:
            verdict = triples_test(realization)
            matches: Dict[str, bool] = {}
            if verdict.verdict is Verdict.PASS:
                matches = {
                    pairing: is_isomorphic(realization.hypergraph, built)
                    for pairing, built in constructions.items()
                }
            entries.append(UniquenessEntry(name, realization, verdict, matches))
    return UniquenessReport(target_n, tuple(entries))


def describe_system(system: PairSystem) -> List[Dict[str, Union[int, List[str]]]]:
    """``p_i`` and ``M_i`` rows in label order, for logs and certificates."""
    return [
        {
            "index": index,
            "pair": describe_pair(pair),
            "complement": describe_set(complement),
        }
        for index, (pair, complement) in enumerate(
            zip(system.pairs, system.complements), start=1
        )
    ]
