"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class RandichamError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(RandichamError, ValueError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class TooLarge(GraphError):
    """More than 64 vertices requested."""


class BadParams(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class FunctionUndefinedAtDegree(RandichamError, ValueError):
    pass


class IsolatedVertexWithNegativeAlpha(FunctionUndefinedAtDegree):
    pass


class DomainError(RandichamError, ValueError):
    """Argument outside the domain where a formula is defined."""


class KOutOfRange(DomainError):
    pass


class IOutOfRange(DomainError):
    pass


class OddLength(DomainError):
    pass


class NoRootFound(RandichamError, ArithmeticError):
    pass


class Disconnected(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class NotBalanced(GraphError):
    pass


class TooLargeForOracle(RandichamError, ValueError):
    pass
