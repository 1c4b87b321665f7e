"""Exact Hamiltonicity decisions for small graphs.

The main procedure is a subset dynamic programme: ``reach[mask]`` is the
bitset of vertices ``v`` such that some path starting at vertex 0 visits
exactly ``mask`` and ends at ``v``.  A plain backtracking search is kept as
an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import KOutOfRange, TooLargeForOracle
from .graph import Graph

MAX_ORACLE_ORDER = 24
MAX_K_ORDER = 14
MAX_K = 3


@dataclass(frozen=True)
class OracleResult:
    hamiltonian: bool
    cycle: Optional[tuple[int, ...]] = None


def _low_vertex(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _reach_table(adj: tuple[int, ...], n: int) -> list[int]:
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[1] = 1
    for mask in range(1, 1 << n, 2):
        ends = reach[mask]
        if not ends:
            continue
        free = full & ~mask
        while ends:
            low = ends & -ends
            ends ^= low
            nxt = adj[low.bit_length() - 1] & free
            while nxt:
                w = nxt & -nxt
                nxt ^= w
                reach[mask | w] |= w
    return reach


def _is_valid_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    if sorted(cycle) != list(range(g.n)):
        return False
    return all(g.has_edge(cycle[j], cycle[(j + 1) % g.n]) for j in range(g.n))


def hamiltonian_cycle_dp(g: Graph) -> OracleResult:
    """Subset DP without any shortcut filters."""
    n = g.n
    if n < 3:
        return OracleResult(False)
    reach = _reach_table(g.adj, n)
    full = (1 << n) - 1
    closers = reach[full] & g.adj[0]
    if not closers:
        return OracleResult(False)
    cur = _low_vertex(closers)
    mask = full
    walk = [cur]
    while mask != 1:
        prev = mask ^ (1 << cur)
        cur = _low_vertex(reach[prev] & g.adj[cur])
        walk.append(cur)
        mask = prev
    cycle = tuple(reversed(walk))
    if not _is_valid_cycle(g, cycle):
        raise AssertionError(f"invalid witness {cycle} for {g!r}")
    return OracleResult(True, cycle)


def hamiltonian_cycle(g: Graph, max_order: int = MAX_ORACLE_ORDER) -> OracleResult:
    if g.n > max_order:
        raise TooLargeForOracle(f"order {g.n} exceeds oracle limit {max_order}")
    if g.n < 3 or min(g.degrees()) < 2 or not g.is_connected():
        return OracleResult(False)
    return hamiltonian_cycle_dp(g)


def hamiltonian_cycle_backtrack(g: Graph) -> OracleResult:
    """Depth-first extension of paths from vertex 0; exponential, small n only."""
    n = g.n
    if n < 3:
        return OracleResult(False)
    full = (1 << n) - 1
    walk = [0]

    def extend(v: int, used: int) -> bool:
        if used == full:
            return bool(g.adj[v] & 1)
        cand = g.adj[v] & ~used
        while cand:
            w = _low_vertex(cand)
            cand &= cand - 1
            walk.append(w)
            if extend(w, used | 1 << w):
                return True
            walk.pop()
        return False

    if extend(0, 1):
        return OracleResult(True, tuple(walk))
    return OracleResult(False)


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g).hamiltonian


def is_k_hamiltonian(g: Graph, k: int, max_order: int = MAX_K_ORDER, max_k: int = MAX_K) -> bool:
    """True iff deleting any set of at most ``k`` vertices leaves a Hamiltonian graph."""
    if k < 0 or g.n - k < 3:
        raise KOutOfRange(f"need 0 <= k <= n-3, got k={k}, n={g.n}")
    if g.n > max_order or k > max_k:
        raise TooLargeForOracle(f"(n={g.n}, k={k}) exceeds limits (n<={max_order}, k<={max_k})")
    # cheap necessary condition: every vertex keeps degree >= 2 after deleting k neighbours
    if min(g.degrees()) < k + 2:
        return False
    for size in range(k + 1):
        for removed in combinations(range(g.n), size):
            if not hamiltonian_cycle(g.remove_vertices(removed)).hamiltonian:
                return False
    return True
