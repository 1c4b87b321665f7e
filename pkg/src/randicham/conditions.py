"""Sufficient conditions for (k-)Hamiltonicity in terms of ``sum d(v)**alpha``.

Every checker returns a :class:`ConditionReport`.  ``GUARANTEED`` means the
hypothesis of a sound sufficient condition holds, so the graph has the
property.  ``INCONCLUSIVE`` promises nothing: the conditions are one-sided.
An index equal to its threshold (within ``rel_tol``) is always reported as
inconclusive with ``tight=True``, because the graphs attaining the bounds
are exactly the non-Hamiltonian extremal ones.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import Disconnected, DomainError, KOutOfRange, NotBalanced, NotBipartite
from .graph import Graph, bipartition
from .indices import as_alpha, zeroth_order_randic
from .thresholds import (
    bipartite_bound,
    hamiltonian_bound,
    k_hamiltonian_bound,
    lower_regime_bound,
    upper_regime_bound,
)

DEFAULT_REL_TOL = 1e-9

# order gates taken from the large-order proofs
LARGE_N_GATE_K = 13.25
LARGE_N_GATE_HAMILTONIAN = 3.0


class Verdict(str, enum.Enum):
    GUARANTEED = "Guaranteed"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ConditionReport:
    verdict: Verdict
    theorem_tag: str
    index_value: Optional[float]
    threshold: Optional[float]
    comparison: str
    tight: bool = False
    notes: str = ""

    @property
    def guaranteed(self) -> bool:
        return self.verdict is Verdict.GUARANTEED

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "theorem_tag": self.theorem_tag,
            "index_value": _json_number(self.index_value),
            "threshold": _json_number(self.threshold),
            "comparison": self.comparison,
            "tight": self.tight,
            "notes": self.notes,
        }


def _json_number(x):
    if x is None or isinstance(x, int):
        return x
    return x if math.isfinite(x) else None


def _decide(index: float, threshold: float, greater: bool, rel_tol: float) -> tuple[Verdict, bool]:
    if math.isclose(index, threshold, rel_tol=rel_tol, abs_tol=0.0):
        return Verdict.INCONCLUSIVE, True
    holds = index > threshold if greater else index < threshold
    return (Verdict.GUARANTEED if holds else Verdict.INCONCLUSIVE), False


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected("conditions assume a connected graph")


def _require_k(n: int, k: int) -> None:
    if not 0 <= k <= n - 3:
        raise KOutOfRange(f"need 0 <= k <= n-3, got k={k}, n={n}")


def _not_applicable(tag: str, comparison: str, index, notes: str) -> ConditionReport:
    return ConditionReport(Verdict.NOT_APPLICABLE, tag, index, None, comparison, False, notes)


def check_k_hamiltonian(g: Graph, k: int, alpha: float, rel_tol: float = DEFAULT_REL_TOL) -> ConditionReport:
    """General bound, valid for every order.

    alpha > 0: index above the larger of the two end bounds.
    -1 <= alpha < 0: index below the smaller of them.
    """
    a = as_alpha(alpha)
    _require_connected(g)
    n = g.n
    _require_k(n, k)
    index = zeroth_order_randic(g, a)
    mid = (n - k - 1) // 2
    ends = (k_hamiltonian_bound(1, n, k, a), k_hamiltonian_bound(mid, n, k, a))
    if a > 0:
        threshold = max(ends)
        verdict, tight = _decide(index, threshold, True, rel_tol)
        return ConditionReport(verdict, "k-hamiltonian", index, threshold, "greater_than", tight)
    if a >= -1:
        threshold = min(ends)
        verdict, tight = _decide(index, threshold, False, rel_tol)
        notes = "equality reached; no extremal characterisation for negative alpha" if tight else ""
        return ConditionReport(verdict, "k-hamiltonian-negative", index, threshold, "less_than", tight, notes)
    return _not_applicable("k-hamiltonian", "less_than", index, "no bound for alpha < -1")


def check_hamiltonian(g: Graph, alpha: float, rel_tol: float = DEFAULT_REL_TOL) -> ConditionReport:
    if g.n < 3:
        raise DomainError("Hamiltonicity needs n >= 3")
    return check_k_hamiltonian(g, 0, alpha, rel_tol)


def large_n_gate(k: int, alpha: float) -> float:
    return (LARGE_N_GATE_K if k >= 1 else LARGE_N_GATE_HAMILTONIAN) * alpha


def large_n_threshold(n: int, k: int, alpha: float) -> float:
    """Single threshold used once the order passes the gate."""
    a = as_alpha(alpha)
    _require_k(n, k)
    if k == n - 5:
        return 3 * (n - 3) ** a + (n - 3) * (n - 1) ** a
    return k_hamiltonian_bound(1, n, k, a)


def check_large_n(
    g: Graph,
    k: int,
    alpha: float,
    rel_tol: float = DEFAULT_REL_TOL,
    enforce_gate: bool = True,
) -> ConditionReport:
    """Large-order bound for alpha >= 2: one threshold instead of a maximum.

    Applies when n >= 13.25 alpha (k >= 1) or n >= 3 alpha (k = 0).
    ``enforce_gate=False`` evaluates the comparison regardless; the result is
    then arithmetic only and not a sound guarantee.
    """
    a = as_alpha(alpha)
    _require_connected(g)
    n = g.n
    _require_k(n, k)
    tag = "large-n" if k >= 1 else "large-n-hamiltonian"
    index = zeroth_order_randic(g, a)
    if a < 2:
        return _not_applicable(tag, "greater_than", index, "needs alpha >= 2")
    gate = large_n_gate(k, a)
    if enforce_gate and n < gate:
        return _not_applicable(tag, "greater_than", index, f"order {n} below gate {gate:g}")
    threshold = large_n_threshold(n, k, a)
    verdict, tight = _decide(index, threshold, True, rel_tol)
    notes = "" if enforce_gate else "gate waived"
    return ConditionReport(verdict, tag, index, threshold, "greater_than", tight, notes)


class Regime(str, enum.Enum):
    ENDPOINT = "Regime1"  # n >= f0: the i = 1 bound dominates
    MIDDLE = "Regime2"  # n <= f1: the middle-index bound dominates
    MIXED = "Regime3"  # in between: take the maximum


@dataclass(frozen=True)
class RegimeInfo:
    regime: Regime
    threshold: float
    f0: float
    f1: float


def regime(n: int, alpha: float) -> RegimeInfo:
    a = as_alpha(alpha)
    if n < 5 or a < 2:
        raise DomainError(f"regime needs n >= 5 and alpha >= 2, got n={n}, alpha={a}")
    f0, f1 = upper_regime_bound(a), lower_regime_bound(a)
    first = hamiltonian_bound(1, n, a)
    middle = hamiltonian_bound((n - 1) // 2, n, a)
    if n >= f0:
        return RegimeInfo(Regime.ENDPOINT, first, f0, f1)
    if n <= f1:
        return RegimeInfo(Regime.MIDDLE, middle, f0, f1)
    return RegimeInfo(Regime.MIXED, max(first, middle), f0, f1)


def check_regime(g: Graph, alpha: float, rel_tol: float = DEFAULT_REL_TOL) -> ConditionReport:
    """Hamiltonicity test using only the threshold of the order's regime."""
    a = as_alpha(alpha)
    _require_connected(g)
    index = zeroth_order_randic(g, a)
    if g.n < 5 or a < 2:
        return _not_applicable("threshold-regime", "greater_than", index, "needs n >= 5 and alpha >= 2")
    info = regime(g.n, a)
    verdict, tight = _decide(index, info.threshold, True, rel_tol)
    return ConditionReport(verdict, "threshold-regime", index, info.threshold, "greater_than", tight,
                           info.regime.value)


def check_bipartite(
    g: Graph,
    alpha: float,
    rel_tol: float = DEFAULT_REL_TOL,
    strict: bool = False,
) -> ConditionReport:
    """Balanced bipartite bound on 2n vertices.

    alpha > 0        index > B(1)
    -1 < alpha < 0   index < B(1)
    alpha == -1      index < 3
    alpha < -1       index < B(n/2) for even n, B((n-1)/2) for odd n
    where B is :func:`bipartite_bound`.  Non-bipartite or unbalanced input is
    reported as not applicable, or raised when ``strict``.
    """
    a = as_alpha(alpha)
    _require_connected(g)
    tag = "bipartite"
    parts = bipartition(g)
    if parts is None:
        if strict:
            raise NotBipartite("graph has an odd cycle")
        return _not_applicable(tag, "", None, "not bipartite")
    if not parts.balanced:
        if strict:
            raise NotBalanced("bipartition sides differ in size")
        return _not_applicable(tag, "", None, "bipartite but not balanced")
    h = g.n // 2
    if h < 2:
        return _not_applicable(tag, "", None, "needs at least 2 vertices per side")
    index = zeroth_order_randic(g, a)
    if a > 0:
        threshold, greater = bipartite_bound(1, h, a), True
    elif a > -1:
        threshold, greater = bipartite_bound(1, h, a), False
    elif a == -1:
        threshold, greater = 3.0, False
    elif h % 2 == 0:
        threshold, greater = bipartite_bound(h // 2, h, a), False
    else:
        threshold, greater = bipartite_bound((h - 1) // 2, h, a), False
    verdict, tight = _decide(index, threshold, greater, rel_tol)
    return ConditionReport(verdict, tag, index, threshold, "greater_than" if greater else "less_than", tight)
