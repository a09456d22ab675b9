"""Exception hierarchy for hypercert.

Errors that describe a mathematical failure carry a JSON-serializable
``witness`` so that the command line can store it in a certificate.
"""

from typing import Any, Optional


class HypercertError(Exception):
    """Base class for every error raised by the toolkit."""

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


# Graph primitives


class GraphError(HypercertError):
    """Malformed graph or an operation applied to the wrong kind of edge."""


class MissingEdge(GraphError):
    """The edge is not present in the graph."""


class LoopWeightUndefined(GraphError):
    """Edge weights are only defined for proper (non-loop) edges."""


# Clique families and pair systems


class FamilyError(HypercertError):
    """A clique family or pair system violates its defining laws."""


class NotEmptyIntersection(FamilyError):
    """The members of the family share a common vertex."""


class DegenerateFamily(FamilyError):
    """The irredundant subfamily has fewer than three members."""


class NoPrivatePair(FamilyError):
    """Some member has no 2-subset avoided by every other member."""


class NonUniformFamily(FamilyError):
    """Complements of the members do not all have the same size."""


class CliqueLimitExceeded(FamilyError):
    """Maximum-clique enumeration hit its configured cap."""


# Proof pipeline


class ProofError(HypercertError):
    """A checked inequality or claim of the argument did not hold."""


class InfeasibleContext(ProofError):
    """A negative edge weight: the context cannot come from a valid system."""


class MonotonicityFailure(ProofError):
    """Removing a zero-weight edge decreased the order bound."""


class BoundViolation(ProofError):
    """An enumerated graph exceeds one of the checked bounds."""


class PreconditionFailed(ProofError):
    """An operation was applied outside its mathematical precondition."""


class VerificationFailure(ProofError):
    """A verification claim about a construction did not hold."""


class Infeasible(ProofError):
    """No system realizes the candidate at the requested order."""


# Usage


class UsageError(HypercertError):
    """Arguments outside the supported range."""


class OutOfRange(UsageError):
    """A numeric parameter is outside its domain."""


class SearchTooLarge(UsageError):
    """The requested exhaustive search exceeds its guard."""


class FormatError(HypercertError):
    """A text or JSON input could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
