"""hypercert: exact certificates for clique families of 3-uniform hypergraphs."""

from .graph import LoopGraph, transversal_number
from .hypergraph import CliqueFamily, Hypergraph3, clique_number
from .pairs import PairSystem
from .weights import WeightedContext, order_bound, weighted_context

__version__ = "0.1.0"

__all__ = [
    "CliqueFamily",
    "Hypergraph3",
    "LoopGraph",
    "PairSystem",
    "WeightedContext",
    "clique_number",
    "order_bound",
    "transversal_number",
    "weighted_context",
]
