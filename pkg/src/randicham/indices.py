"""Vertex-degree function indices.

``h_f_index`` sums an arbitrary function of the vertex degrees;
``zeroth_order_randic`` is the power-function instance ``sum d(v)**alpha``.
With ``alpha`` equal to 1, 2 and 3 this is twice the edge count, the first
Zagreb index and the forgotten index respectively.
"""

from __future__ import annotations

import math
from typing import Callable, Union

from .errors import DomainError, FunctionUndefinedAtDegree, IsolatedVertexWithNegativeAlpha
from .graph import Graph

Number = Union[int, float]


def as_alpha(value: float) -> float:
    """Validate a real exponent: finite and nonzero."""
    a = float(value)
    if not math.isfinite(a) or a == 0.0:
        raise DomainError(f"alpha must be finite and nonzero, got {value!r}")
    return a


def h_f_index(g: Graph, f: Callable[[int], Number]) -> Number:
    values = []
    for d in g.degrees():
        try:
            values.append(f(d))
        except (ZeroDivisionError, ValueError, OverflowError) as exc:
            raise FunctionUndefinedAtDegree(f"f undefined at degree {d}") from exc
    if all(isinstance(v, int) for v in values):
        return sum(values)
    return math.fsum(values)


def zeroth_order_randic(g: Graph, alpha: float) -> Number:
    """Sum of ``degree ** alpha`` over all vertices.

    Integer exponents >= 1 are evaluated in exact integer arithmetic and the
    result is returned as an ``int``.
    """
    a = as_alpha(alpha)
    degrees = g.degrees()
    if a < 0 and 0 in degrees:
        raise IsolatedVertexWithNegativeAlpha("isolated vertex with negative alpha")
    if a >= 1 and a.is_integer():
        p = int(a)
        return sum(d ** p for d in degrees)
    return math.fsum(d ** a for d in degrees)


def first_zagreb(g: Graph) -> int:
    return zeroth_order_randic(g, 2)


def forgotten(g: Graph) -> int:
    return zeroth_order_randic(g, 3)


def randic_from_degrees(degrees, alpha: float) -> float:
    """Same sum as :func:`zeroth_order_randic`, from a bare degree list."""
    a = as_alpha(alpha)
    return math.fsum(d ** a for d in degrees)
