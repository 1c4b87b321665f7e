"""Small undirected simple graphs stored as per-vertex neighbour bitsets.

Vertices are the integers ``0..n-1``.  Vertex ``v`` is adjacent to ``u``
exactly when bit ``u`` of ``adj[v]`` is set.  The order is capped at 64 so
that every adjacency row fits in one machine word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    BadParams,
    MalformedEdgeList,
    MalformedGraph6,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
)

MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n > MAX_ORDER:
            raise TooLarge(f"order {self.n} exceeds {MAX_ORDER}")
        if self.n < 0 or len(self.adj) != self.n:
            raise BadParams("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise VertexOutOfRange(f"vertex {v} has a neighbour >= {self.n}")
            if row >> v & 1:
                raise SelfLoop(f"self-loop at {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise BadParams(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        """Degrees in vertex order (not sorted)."""
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={self.n}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_vertices(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, relabelled in order."""
        gone = 0
        for v in removed:
            gone |= 1 << v
        keep = [v for v in range(self.n) if not gone >> v & 1]
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in _bits(self.adj[v] & ~gone):
                row |= 1 << index[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={emit_graph6(self)!r})"


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        d = self.degrees
        if any(a > b for a, b in zip(d, d[1:])):
            raise BadParams("degree sequence must be nondecreasing")
        if d and (d[0] < 0 or d[-1] > len(d) - 1):
            raise BadParams("degrees must lie in [0, n-1]")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i: int) -> int:
        """1-based access, matching the usual d_1 <= ... <= d_n notation."""
        if not 1 <= i <= len(self.degrees):
            raise IndexError(i)
        return self.degrees[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class Bipartition:
    X: int
    Y: int

    @property
    def balanced(self) -> bool:
        return self.X.bit_count() == self.Y.bit_count()

    def sides(self) -> tuple[list[int], list[int]]:
        return list(_bits(self.X)), list(_bits(self.Y))


# --- construction -----------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds {MAX_ORDER}")
    if n < 0:
        raise BadParams("order must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise TooLarge(f"combined order {n} exceeds {MAX_ORDER}")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise TooLarge(f"combined order {n} exceeds {MAX_ORDER}")
    h_block = ((1 << h.n) - 1) << g.n
    g_block = (1 << g.n) - 1
    adj = [row | h_block for row in g.adj] + [(row << g.n) | g_block for row in h.adj]
    return Graph(n, tuple(adj))


def complete(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise BadParams(f"complete graph needs 1 <= n <= {MAX_ORDER}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise BadParams(f"empty graph needs 1 <= n <= {MAX_ORDER}")
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if not 3 <= n <= MAX_ORDER:
        raise BadParams("cycle needs 3 <= n <= 64")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise BadParams("path needs 1 <= n <= 64")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices ``0..a-1``."""
    if a < 1 or b < 1:
        raise BadParams("complete bipartite sides must be positive")
    return join(empty(a), empty(b))


_FAMILIES = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
}


def family(name: str, *params: int) -> Graph:
    try:
        build = _FAMILIES[name]
    except KeyError:
        raise BadParams(f"unknown family {name!r}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {name}: {params}") from exc


# --- derived structure ------------------------------------------------------


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees())))


def bipartition(g: Graph) -> Optional[Bipartition]:
    """BFS 2-colouring; the lowest vertex of each component goes to X."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    X = sum(1 << v for v in range(g.n) if side[v] == 0)
    return Bipartition(X, g.vertex_mask & ~X)


# --- serialisation ----------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"invalid graph6 string {text!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise MalformedGraph6("unsupported graph6 size header")
        n = 0
        for c in s[1:4]:
            n = n << 6 | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # padding bits must be zero in canonical form
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise MalformedEdgeList("first line must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from exc
    if len(pairs) != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)
