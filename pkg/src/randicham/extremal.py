"""Graphs attaining the degree-power bounds with equality.

Vertex order is fixed (clique block first, then the sparse block) so that
emitted graph6 strings are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams
from .graph import Graph, complete, complete_bipartite, disjoint_union, empty, join


def kite(n: int, k: int) -> Graph:
    """K_{k+1} joined to (K_1 plus K_{n-k-2})."""
    if k < 0 or n < k + 3:
        raise BadParams(f"kite needs 0 <= k <= n-3, got n={n}, k={k}")
    return join(complete(k + 1), disjoint_union(complete(1), complete(n - k - 2)))


def split_extremal(n: int, k: int) -> Graph:
    """Clique joined to an (almost) independent set, by parity of n - k.

    n - k odd:  K_{(n+k-1)/2} joined to (n-k+1)/2 isolated vertices.
    n - k even: K_{(n+k-2)/2} joined to K_2 plus (n-k-2)/2 isolated vertices.
    """
    if k < 0 or n < k + 3:
        raise BadParams(f"split_extremal needs 0 <= k <= n-3, got n={n}, k={k}")
    if (n - k) % 2:
        return join(complete((n + k - 1) // 2), empty((n - k + 1) // 2))
    return join(complete((n + k - 2) // 2), disjoint_union(complete(2), empty((n - k - 2) // 2)))


def bipartite_deleted(n: int, s: int) -> Graph:
    """K_{n,n} minus every edge between S (|S| = s, in X) and T (|T| = n-s, in Y).

    X is ``0..n-1`` with S its first ``s`` vertices; Y is ``n..2n-1`` with T
    its first ``n-s`` vertices.
    """
    if n < 2 or not 1 <= s <= n - 1:
        raise BadParams(f"bipartite_deleted needs n >= 2 and 1 <= s <= n-1, got n={n}, s={s}")
    g = complete_bipartite(n, n)
    adj = list(g.adj)
    S = (1 << s) - 1
    T = ((1 << (n - s)) - 1) << n
    for x in range(s):
        adj[x] &= ~T
    for y in range(n, 2 * n - s):
        adj[y] &= ~S
    return Graph(2 * n, tuple(adj))


@dataclass(frozen=True)
class ExtremalSpec:
    family: str  # "kite" | "split" | "bipartite"
    n: int
    k: int = 0
    s: int = 0

    def build(self) -> Graph:
        if self.family == "kite":
            return kite(self.n, self.k)
        if self.family == "split":
            return split_extremal(self.n, self.k)
        if self.family == "bipartite":
            return bipartite_deleted(self.n, self.s)
        raise BadParams(f"unknown extremal family {self.family!r}")
