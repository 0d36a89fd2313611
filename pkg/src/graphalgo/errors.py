"""Exception hierarchy shared by every module.

All library errors derive from :class:`GraphError`; the CLI maps any of them
to exit code 1.
"""


class GraphError(Exception):
    """Base class for domain errors."""


# graph construction
class InvariantViolation(GraphError, ValueError):
    pass


class LoopEdge(InvariantViolation):
    pass


class DuplicateEdge(InvariantViolation):
    pass


class ZeroWeight(InvariantViolation):
    pass


class IndexOutOfRange(InvariantViolation, IndexError):
    pass


class UnknownFamily(GraphError, KeyError):
    pass


class BadParams(GraphError, ValueError):
    pass


# applicability of an operation to a given graph
class KindUnsupportedForGraph(GraphError):
    pass


class WeightedUnsupported(GraphError):
    pass


class DirectedUnsupported(GraphError):
    pass


class Unweighted(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooLarge(GraphError):
    pass


class TooSmall(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class BadOrdering(GraphError, ValueError):
    pass


# euler / hamilton
class NotEulerian(GraphError):
    pass


class NoEulerPath(GraphError):
    pass


# planarity
class NotACycle(GraphError, ValueError):
    pass


class InvalidRotation(GraphError, ValueError):
    pass


class NonPlanar(GraphError):
    pass


class NotSimpleStar(GraphError):
    pass


class OuterFaceEndpoint(GraphError, ValueError):
    pass


class AmbiguousRepresentation(GraphError):
    pass


# flows
class InvalidFlow(GraphError, ValueError):
    pass


class BadNetwork(GraphError, ValueError):
    pass


class UnboundedCost(GraphError):
    pass


# metrics / spectral
class DegreeTooSmall(GraphError):
    pass


class DegenerateBaseline(GraphError):
    pass


class IsolatedVertex(GraphError):
    pass


class NotSymmetric(GraphError, ValueError):
    pass


class NoConvergence(GraphError):
    pass


class BadDimension(GraphError, ValueError):
    pass


class BadP(GraphError, ValueError):
    pass


class ZeroVector(GraphError, ValueError):
    pass


# io
class ParseError(GraphError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
