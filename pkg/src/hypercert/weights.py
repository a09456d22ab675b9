"""Edge weights of the private-pairs graph and the order bound they imply."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Tuple

from hypercert.errors import (
    GraphError,
    InfeasibleContext,
    LoopWeightUndefined,
    MissingEdge,
    MonotonicityFailure,
)
from hypercert.graph import (
    Edge,
    LoopGraph,
    Vertex,
    format_edge,
    is_loop,
    remove_edge,
    support,
    transversal_number,
    truncate,
    without_isolated,
)
from hypercert.logging import get_logger

logger = get_logger(__name__)

# Zero-weight edges are removed only while this many edges remain.
MIN_EDGES_FOR_REDUCTION = 3


class EdgeKind(str, Enum):
    """Position of an edge relative to the rest of the graph."""

    ISOLATED = "isolated"
    PENDANT = "pendant"
    INTERNAL = "internal"


def edge_weight(graph: LoopGraph, m: int, p: Edge) -> int:
    """``m - tau(G \\ p)``; negative values mean the context is infeasible.

    Raises:
        LoopWeightUndefined: ``p`` is a loop
        MissingEdge: ``p`` is not an edge of ``graph``
    """
    if is_loop(p):
        raise LoopWeightUndefined(f"Loop {format_edge(p)} carries no weight")
    return m - transversal_number(truncate(graph, p))


@dataclass(frozen=True)
class WeightedContext:
    """A loop-free private-pairs graph with its deficiency ``m`` and weights."""

    graph: LoopGraph
    m: int
    weights: Dict[Edge, int] = field(compare=False)

    @property
    def support(self) -> FrozenSet[Vertex]:
        return support(self.graph)

    def weight_list(self) -> List[Tuple[Edge, int]]:
        return [(e, self.weights[e]) for e in self.graph.sorted_edges()]

    def zero_edges(self) -> List[Edge]:
        return [e for e, w in self.weight_list() if w == 0]

    def negative_edges(self) -> List[Edge]:
        return [e for e, w in self.weight_list() if w < 0]


def weighted_context(graph: LoopGraph, m: int) -> WeightedContext:
    """Weights of every edge of a loop-free graph at deficiency ``m``."""
    if graph.loops:
        raise GraphError("Weighted contexts are defined on loop-free graphs")
    return WeightedContext(
        graph, m, {e: edge_weight(graph, m, e) for e in graph.sorted_edges()}
    )


def total_weight(context: WeightedContext) -> int:
    return sum(context.weights.values())


def order_bound(context: WeightedContext) -> int:
    """``|V_0(G)| + w(G)``, the most vertices a realization can have.

    Raises:
        InfeasibleContext: Some edge has negative weight
    """
    negative = context.negative_edges()
    if negative:
        raise InfeasibleContext(
            f"{len(negative)} edges have negative weight",
            witness={format_edge(e): context.weights[e] for e in negative},
        )
    return len(context.support) + total_weight(context)


@dataclass(frozen=True)
class ChainReport:
    """The chain ``tau(G) - 1 <= tau(G - p) <= tau(G \\ p) <= m`` for one edge."""

    edge: Edge
    m: int
    tau: int
    tau_removed: int
    tau_truncated: int

    @property
    def lower_holds(self) -> bool:
        return self.tau - 1 <= self.tau_removed

    @property
    def middle_holds(self) -> bool:
        return self.tau_removed <= self.tau_truncated

    @property
    def upper_holds(self) -> bool:
        return self.tau_truncated <= self.m

    @property
    def structural(self) -> bool:
        """The two inequalities that hold for every graph."""
        return self.lower_holds and self.middle_holds

    def to_dict(self) -> Dict[str, object]:
        return {
            "edge": format_edge(self.edge),
            "m": self.m,
            "tau": self.tau,
            "tau_removed": self.tau_removed,
            "tau_truncated": self.tau_truncated,
            "holds": [self.lower_holds, self.middle_holds, self.upper_holds],
        }


def check_chain(graph: LoopGraph, m: int, p: Edge) -> ChainReport:
    if is_loop(p):
        raise LoopWeightUndefined(f"Loop {format_edge(p)} has no chain")
    return ChainReport(
        edge=p,
        m=m,
        tau=transversal_number(graph),
        tau_removed=transversal_number(remove_edge(graph, p)),
        tau_truncated=transversal_number(truncate(graph, p)),
    )


def classify_edge(graph: LoopGraph, p: Edge) -> EdgeKind:
    """Isolated, pendant or internal, by the degrees of the endpoints."""
    if p not in graph.edges:
        raise MissingEdge(f"Edge {format_edge(p)} is not in the graph")
    leaves = sum(1 for v in p if graph.degree(v) == 1)
    if leaves == 2:
        return EdgeKind.ISOLATED
    if leaves == 1:
        return EdgeKind.PENDANT
    return EdgeKind.INTERNAL


@dataclass(frozen=True)
class ReductionStep:
    edge: Edge
    kind: EdgeKind
    bound_before: int
    bound_after: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "edge": format_edge(self.edge),
            "kind": self.kind.value,
            "bound_before": self.bound_before,
            "bound_after": self.bound_after,
        }


def reduce_zero_weights(
    context: WeightedContext,
) -> Tuple[WeightedContext, List[ReductionStep]]:
    """Remove zero-weight edges one at a time while at least three edges remain.

    The least zero-weight edge goes first. Weights are recomputed after every
    removal and the order bound must never decrease.

    Raises:
        InfeasibleContext: The starting context has a negative weight
        MonotonicityFailure: A removal lowered the order bound
    """
    current = context
    bound = order_bound(current)
    steps: List[ReductionStep] = []

    while current.graph.size >= MIN_EDGES_FOR_REDUCTION:
        zeros = current.zero_edges()
        if not zeros:
            break
        target = zeros[0]
        kind = classify_edge(current.graph, target)
        reduced = weighted_context(remove_edge(current.graph, target), current.m)
        after = order_bound(reduced)
        step = ReductionStep(target, kind, bound, after)
        if after < bound:
            raise MonotonicityFailure(
                f"Removing {format_edge(target)} lowered the bound {bound} -> {after}",
                witness={
                    "graph": [format_edge(e) for e in current.graph.sorted_edges()],
                    "m": current.m,
                    "step": step.to_dict(),
                },
            )
        logger.debug(
            f"removed {kind.value} edge {format_edge(target)}: {bound} -> {after}"
        )
        steps.append(step)
        current, bound = reduced, after

    return current, steps


@dataclass(frozen=True)
class Reduction:
    """Outcome of the zero-weight reduction, with the reduced graph ``G*``."""

    start: WeightedContext
    final: WeightedContext
    steps: Tuple[ReductionStep, ...]
    reduced_graph: LoopGraph
    tau: int

    @property
    def start_bound(self) -> int:
        return order_bound(self.start)

    @property
    def final_bound(self) -> int:
        return order_bound(self.final)

    @property
    def vertex_edge_total(self) -> int:
        """``|V*| + |E*|`` of the reduced graph."""
        return self.reduced_graph.order + self.reduced_graph.size


def step2_reduce(context: WeightedContext) -> Reduction:
    """Reduce ``context`` and keep the zero-weight-free graph ``G*``."""
    final, steps = reduce_zero_weights(context)
    reduced = without_isolated(final.graph)
    return Reduction(
        start=context,
        final=final,
        steps=tuple(steps),
        reduced_graph=reduced,
        tau=transversal_number(reduced),
    )
