"""Quantitative skeleton of the order bound.

Closed-form bounds for a two-edge cover, the criticality bounds for large
transversal numbers, and the case-by-case enumeration of weighted
candidates for ``m = 4``.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from itertools import combinations
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from hypercert.canonical import CanonicalCode, canonical_code
from hypercert.enumeration import (
    enumerate_forests,
    enumerate_graphs,
    tau_critical_graphs,
)
from hypercert.errors import BoundViolation, OutOfRange, PreconditionFailed
from hypercert.graph import (
    Edge,
    LoopGraph,
    complete_graph,
    contains_subgraph,
    cycle_graph,
    disjoint_union,
    edge,
    format_edge,
    graph_name,
    is_forest,
    is_tau_critical,
    isolated_vertices,
    matching_graph,
    remove_edge,
    star_graph,
    support,
    transversal_number,
    without_isolated,
)
from hypercert.logging import get_logger
from hypercert.weights import (
    Reduction,
    WeightedContext,
    order_bound,
    step2_reduce,
    weighted_context,
)

logger = get_logger(__name__)

DEFAULT_SUPPORT_BUDGET = 7
DEFAULT_FOREST_BUDGET = 10
CASE_M = 4
CASE_TAU = 3
GOLDEN_RESOURCE = "figures.json"


class Core(str, Enum):
    """Case classes, listed in priority order."""

    K4 = "K4"
    C5 = "C5"
    TRIANGLE = "TRIANGLE"
    EVEN_CYCLE = "EVEN_CYCLE"
    ACYCLIC = "ACYCLIC"


CORE_PRIORITY: Tuple[Core, ...] = tuple(Core)

_K4 = complete_graph(4)
_C5 = cycle_graph(5)
_C3 = complete_graph(3)


def classify_core(graph: LoopGraph) -> Core:
    """First matching class of K4, C5, triangle, even cycle, acyclic."""
    if contains_subgraph(graph, _K4):
        return Core.K4
    if contains_subgraph(graph, _C5):
        return Core.C5
    if contains_subgraph(graph, _C3):
        return Core.TRIANGLE
    if is_forest(graph):
        return Core.ACYCLIC
    return Core.EVEN_CYCLE


# Step 1


@dataclass(frozen=True)
class Step1Report:
    m: int
    case_a: int
    case_b: int
    best_x: int
    best_y: int

    @property
    def bound(self) -> int:
        return max(self.case_a, self.case_b)

    @property
    def limit(self) -> int:
        return comb(self.m + 2, 2)

    def to_dict(self) -> Dict[str, int]:
        return {
            "m": self.m,
            "case_a": self.case_a,
            "case_b": self.case_b,
            "best_x": self.best_x,
            "best_y": self.best_y,
            "bound": self.bound,
            "limit": self.limit,
        }


def step1_report(m: int) -> Step1Report:
    """Both closed forms for a private-pairs graph covered by two vertices.

    Case A maximizes ``x(m-x+1) + y(m-y-1)`` over ``0 <= y <= x <= m+1``;
    Case B is ``m + 2 + 2 floor(m/2) ceil(m/2)``.

    Raises:
        OutOfRange: ``m < 2``
        BoundViolation: The larger value exceeds ``C(m+2, 2)``
    """
    if m < 2:
        raise OutOfRange(f"m must be at least 2, got {m}")

    best_value, best_x, best_y = -1, 0, 0
    for x in range(m + 2):
        for y in range(x + 1):
            value = x * (m - x + 1) + y * (m - y - 1)
            if value > best_value:
                best_value, best_x, best_y = value, x, y

    report = Step1Report(
        m=m,
        case_a=m + 2 + best_value,
        case_b=m + 2 + 2 * (m // 2) * ((m + 1) // 2),
        best_x=best_x,
        best_y=best_y,
    )
    if report.bound > report.limit:
        raise BoundViolation(
            f"Step 1 bound {report.bound} exceeds C({m + 2},2) = {report.limit}",
            witness=report.to_dict(),
        )
    return report


def step1_bound(m: int) -> int:
    return step1_report(m).bound


# Step 2


def enumerate_tau_critical(tau: int, max_order: int) -> List[LoopGraph]:
    """Tau-critical graphs with transversal number ``tau`` and few vertices.

    Raises:
        OutOfRange: ``tau < 1`` or ``max_order > 2 tau``
    """
    if tau < 1:
        raise OutOfRange(f"tau must be positive, got {tau}")
    if max_order > 2 * tau:
        raise OutOfRange(
            f"Vertex bound {max_order} exceeds 2*tau = {2 * tau}; "
            "larger graphs cannot be tau-critical"
        )
    return tau_critical_graphs(tau, max_order)


def _require_critical(graph: LoopGraph) -> None:
    if not is_tau_critical(graph):
        raise PreconditionFailed(
            f"{graph_name(graph)} is not tau-critical",
            witness=[format_edge(e) for e in graph.sorted_edges()],
        )


def erdos_gallai_check(graph: LoopGraph) -> bool:
    """A tau-critical graph spans at most ``2 tau`` vertices."""
    _require_critical(graph)
    return len(support(graph)) <= 2 * transversal_number(graph)


def gyarfas_lehel_check(graph: LoopGraph) -> bool:
    """A tau-critical graph has ``|V| + |E| <= C(tau+2, 2)``."""
    _require_critical(graph)
    tau = transversal_number(graph)
    return graph.order + graph.size <= comb(tau + 2, 2)


@dataclass(frozen=True)
class BoundRow:
    graph: LoopGraph
    tau: int
    value: int
    limit: int

    @property
    def margin(self) -> int:
        return self.limit - self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph": graph_name(self.graph),
            "tau": self.tau,
            "value": self.value,
            "limit": self.limit,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class Step2Report:
    """Criticality bounds for ``tau(G) = m + 1`` and ``tau(G*) = m``."""

    m: int
    above: Tuple[BoundRow, ...]
    equal: Tuple[BoundRow, ...]

    @property
    def limit(self) -> int:
        return comb(self.m + 2, 2)

    def tight(self) -> List[LoopGraph]:
        """Graphs of the ``tau = m`` branch that meet the bound with equality."""
        return [row.graph for row in self.equal if row.margin == 0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "limit": self.limit,
            "tau_m_plus_1": [row.to_dict() for row in self.above],
            "tau_m": [row.to_dict() for row in self.equal],
        }


def step2_verify(m: int, max_order: Optional[int] = None) -> Step2Report:
    """Check both criticality routes for every relevant tau-critical graph.

    Raises:
        OutOfRange: ``m < 2``
        BoundViolation: A graph exceeds its bound
    """
    if m < 2:
        raise OutOfRange(f"m must be at least 2, got {m}")
    limit = comb(m + 2, 2)

    above: List[BoundRow] = []
    above_order = 2 * (m + 1) if max_order is None else min(max_order, 2 * (m + 1))
    for graph in enumerate_tau_critical(m + 1, above_order):
        row = BoundRow(graph, m + 1, len(support(graph)), 2 * (m + 1))
        if not erdos_gallai_check(graph) or 2 * (m + 1) > limit:
            raise BoundViolation(
                f"{graph_name(graph)} breaks the vertex bound for tau = {m + 1}",
                witness=row.to_dict(),
            )
        above.append(row)

    equal: List[BoundRow] = []
    equal_order = 2 * m if max_order is None else min(max_order, 2 * m)
    for graph in enumerate_tau_critical(m, equal_order):
        row = BoundRow(graph, m, graph.order + graph.size, limit)
        if not gyarfas_lehel_check(graph) or row.margin < 0:
            raise BoundViolation(
                f"{graph_name(graph)} breaks |V|+|E| <= {limit}",
                witness=row.to_dict(),
            )
        equal.append(row)

    logger.debug(f"step 2 at m={m}: {len(above)} + {len(equal)} graphs checked")
    return Step2Report(m, tuple(above), tuple(equal))


def tightness_graph(m: int) -> LoopGraph:
    """``K_{m+1}``: every weight is 1 and the order bound is ``C(m+2, 2)``."""
    if m < 1:
        raise OutOfRange(f"m must be positive, got {m}")
    return complete_graph(m + 1)


# Case candidates


@dataclass(frozen=True)
class CaseCandidate:
    """A positive-weight private-pairs graph with ``tau = 3`` at ``m = 4``."""

    graph: LoopGraph
    m: int
    core: Core
    weights: Dict[Edge, int] = field(compare=False)
    bound: int
    code: CanonicalCode

    @property
    def name(self) -> str:
        return graph_name(self.graph)

    def context(self) -> WeightedContext:
        return WeightedContext(self.graph, self.m, dict(self.weights))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "core": self.core.value,
            "bound": self.bound,
            "edges": [format_edge(e) for e in self.graph.sorted_edges()],
            "weights": {
                format_edge(e): self.weights[e] for e in self.graph.sorted_edges()
            },
            "code": self.code.hexdigest(),
        }


def make_candidate(graph: LoopGraph, m: int = CASE_M) -> Optional[CaseCandidate]:
    """The candidate for ``graph``, or ``None`` when it is not one.

    A candidate has no isolated vertex, transversal number 3 and only
    positive weights.
    """
    if isolated_vertices(graph) or transversal_number(graph) != CASE_TAU:
        return None
    context = weighted_context(graph, m)
    if any(w < 1 for w in context.weights.values()):
        return None
    return CaseCandidate(
        graph=graph,
        m=m,
        core=classify_core(graph),
        weights=context.weights,
        bound=order_bound(context),
        code=canonical_code(graph),
    )


def _sort_candidates(candidates: Sequence[CaseCandidate]) -> List[CaseCandidate]:
    return sorted(candidates, key=lambda c: (CORE_PRIORITY.index(c.core), c.code))


def enumerate_case_candidates(
    m: int = CASE_M,
    support_budget: int = DEFAULT_SUPPORT_BUDGET,
    forest_budget: int = DEFAULT_FOREST_BUDGET,
) -> List[CaseCandidate]:
    """Every candidate up to isomorphism, ordered by case class.

    All graphs on at most ``support_budget`` vertices are searched, and
    forests up to ``forest_budget`` vertices on top of that.

    Raises:
        OutOfRange: ``m`` is not 4
    """
    if m != CASE_M:
        raise OutOfRange(f"Case enumeration is defined for m = {CASE_M} only")

    found: Dict[CanonicalCode, CaseCandidate] = {}
    for order in range(2, support_budget + 1):
        for graph in enumerate_graphs(order, max_tau=CASE_TAU):
            candidate = make_candidate(graph, m)
            if candidate is not None:
                found.setdefault(candidate.code, candidate)
    for forest in enumerate_forests(CASE_TAU, forest_budget):
        candidate = make_candidate(forest, m)
        if candidate is not None:
            found.setdefault(candidate.code, candidate)

    result = _sort_candidates(list(found.values()))
    logger.debug(f"{len(result)} case candidates at m={m}")
    return result


# Recipes that follow the hand-made case split


def _dedupe(graphs: Iterator[LoopGraph]) -> List[LoopGraph]:
    seen: Dict[CanonicalCode, LoopGraph] = {}
    for graph in graphs:
        trimmed = without_isolated(graph)
        seen.setdefault(canonical_code(trimmed), trimmed)
    return [seen[code] for code in sorted(seen)]


def _grow(
    base: LoopGraph, slots: Sequence[Edge], max_added: Optional[int] = None
) -> Iterator[LoopGraph]:
    """Supergraphs of ``base`` using extra ``slots`` while tau stays at most 3."""

    def extend(graph: LoopGraph, start: int, added: int) -> Iterator[LoopGraph]:
        yield graph
        if max_added is not None and added >= max_added:
            return
        for position in range(start, len(slots)):
            child = LoopGraph(graph.vertices, graph.edges | {slots[position]})
            if transversal_number(child) <= CASE_TAU:
                yield from extend(child, position + 1, added + 1)

    yield from extend(base, 0, 0)


def case1_recipe() -> List[LoopGraph]:
    """``K5`` losing one, two, three or four edges at a common vertex."""
    labels = ["a", "b", "c", "d", "e"]
    k5 = complete_graph(5, labels)
    graphs = []
    graph = k5
    for other in labels[1:]:
        graph = remove_edge(graph, edge("a", other))
        graphs.append(without_isolated(graph))
    return graphs


def case2_recipe(support_budget: int = DEFAULT_SUPPORT_BUDGET) -> List[LoopGraph]:
    """A 5-cycle plus edges that each touch the cycle."""
    cycle = cycle_graph(5)
    extra = list(range(5, support_budget))
    base = LoopGraph(cycle.vertices | frozenset(extra), cycle.edges)
    slots = [
        edge(u, v)
        for u, v in combinations(range(5), 2)
        if edge(u, v) not in base.edges
    ]
    slots += [edge(u, v) for u in range(5) for v in extra]
    return [
        g for g in _dedupe(_grow(base, slots)) if transversal_number(g) == CASE_TAU
    ]


def case3_recipe(support_budget: int = DEFAULT_SUPPORT_BUDGET) -> List[LoopGraph]:
    """``K2 + C3`` plus at most three edges, avoiding ``C5`` and ``K4``."""
    base_edges = [(0, 1), (2, 3), (3, 4), (2, 4)]
    base = LoopGraph.from_edges(base_edges, range(support_budget))
    slots = [
        edge(u, v)
        for u, v in combinations(range(support_budget), 2)
        if edge(u, v) not in base.edges
    ]
    return [
        g
        for g in _dedupe(_grow(base, slots, max_added=3))
        if transversal_number(g) == CASE_TAU
        and not contains_subgraph(g, _C5)
        and not contains_subgraph(g, _K4)
    ]


def acyclic_recipe(forest_budget: int = DEFAULT_FOREST_BUDGET) -> List[LoopGraph]:
    """Forests with transversal number 3, assembled from trees."""
    return enumerate_forests(CASE_TAU, forest_budget)


@dataclass(frozen=True)
class RecipeDiff:
    """How one hand-made recipe compares with the exhaustive class."""

    core: Core
    produced: Tuple[CaseCandidate, ...]
    missing: Tuple[CaseCandidate, ...]
    foreign: Tuple[CaseCandidate, ...]
    reduced: Tuple[Reduction, ...]
    infeasible: Tuple[LoopGraph, ...]

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.foreign

    def to_dict(self) -> Dict[str, Any]:
        return {
            "core": self.core.value,
            "produced": len(self.produced),
            "bounds": sorted(c.bound for c in self.produced),
            "missing": [c.to_dict() for c in self.missing],
            "foreign": [c.to_dict() for c in self.foreign],
            "reduced": [
                {
                    "graph": graph_name(r.start.graph),
                    "reduced_to": graph_name(r.reduced_graph),
                    "bound_before": r.start_bound,
                    "bound_after": r.final_bound,
                    "steps": [s.to_dict() for s in r.steps],
                }
                for r in self.reduced
            ],
            "infeasible": [graph_name(g) for g in self.infeasible],
        }


def recipe_graphs(
    support_budget: int = DEFAULT_SUPPORT_BUDGET,
    forest_budget: int = DEFAULT_FOREST_BUDGET,
) -> Dict[Core, List[LoopGraph]]:
    return {
        Core.K4: case1_recipe(),
        Core.C5: case2_recipe(support_budget),
        Core.TRIANGLE: case3_recipe(support_budget),
        Core.EVEN_CYCLE: [],
        Core.ACYCLIC: acyclic_recipe(forest_budget),
    }


def recipe_diff(
    candidates: Sequence[CaseCandidate],
    recipes: Optional[Dict[Core, List[LoopGraph]]] = None,
    m: int = CASE_M,
) -> List[RecipeDiff]:
    """Compare each recipe with the exhaustive class of the same core.

    Recipe graphs with a zero weight are reduced and kept aside; graphs
    with negative weights cannot come from any system.
    """
    if recipes is None:
        recipes = recipe_graphs()

    diffs = []
    for core in CORE_PRIORITY:
        produced: Dict[CanonicalCode, CaseCandidate] = {}
        reduced: List[Reduction] = []
        infeasible: List[LoopGraph] = []
        for graph in recipes.get(core, []):
            candidate = make_candidate(graph, m)
            if candidate is not None:
                produced.setdefault(candidate.code, candidate)
                continue
            context = weighted_context(graph, m)
            if context.negative_edges():
                infeasible.append(graph)
            else:
                reduced.append(step2_reduce(context))

        in_class = {c.code: c for c in candidates if c.core == core}
        produced_sorted = _sort_candidates(list(produced.values()))
        diffs.append(
            RecipeDiff(
                core=core,
                produced=tuple(produced_sorted),
                missing=tuple(
                    in_class[code] for code in sorted(in_class) if code not in produced
                ),
                foreign=tuple(c for c in produced_sorted if c.core != core),
                reduced=tuple(reduced),
                infeasible=tuple(infeasible),
            )
        )
    return diffs


# Golden figure labels


def load_golden(path: Optional[str] = None) -> Dict[str, Any]:
    """Figure labels shipped with the package, or read from ``path``."""
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            data: Dict[str, Any] = json.load(handle)
            return data
    text = resources.files("hypercert").joinpath("data", GOLDEN_RESOURCE).read_text(
        encoding="utf-8"
    )
    shipped: Dict[str, Any] = json.loads(text)
    return shipped


@dataclass(frozen=True)
class GoldenDiff:
    core: str
    expected: Tuple[int, ...]
    computed: Tuple[int, ...]

    @property
    def missing(self) -> List[int]:
        return sorted((Counter(self.expected) - Counter(self.computed)).elements())

    @property
    def unexpected(self) -> List[int]:
        return sorted((Counter(self.computed) - Counter(self.expected)).elements())

    @property
    def matches(self) -> bool:
        return not self.missing and not self.unexpected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "core": self.core,
            "expected": list(self.expected),
            "computed": list(self.computed),
            "missing": self.missing,
            "unexpected": self.unexpected,
        }


def golden_diff(
    diffs: Sequence[RecipeDiff], golden: Dict[str, Any]
) -> List[GoldenDiff]:
    """Compare the bound multiset of each recipe with the stored labels."""
    bounds = golden.get("bounds", {})
    result = []
    for diff in diffs:
        if diff.core.value not in bounds:
            continue
        result.append(
            GoldenDiff(
                core=diff.core.value,
                expected=tuple(sorted(bounds[diff.core.value])),
                computed=tuple(sorted(c.bound for c in diff.produced)),
            )
        )
    return result


def critical_names(graphs: Sequence[LoopGraph]) -> List[str]:
    return sorted(graph_name(g) for g in graphs)


def figure_graphs() -> Dict[str, LoopGraph]:
    """The labelled drawings whose bounds are quoted in the golden file."""
    cherry = star_graph(2)
    return {
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "3K2": matching_graph(3),
        "3K1,2": disjoint_union([cherry, cherry, cherry]),
    }
