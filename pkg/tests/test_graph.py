import random

import networkx as nx
import pytest
from hypothesis import given, settings

from randicham.errors import BadParams, MalformedGraph6, SelfLoop, TooLarge, VertexOutOfRange
from randicham.graph import (
    Graph,
    bipartition,
    complete,
    complete_bipartite,
    cycle,
    degree_sequence,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    empty,
    family,
    from_edge_list,
    join,
    parse_edge_list,
    parse_graph6,
    path,
)
from randicham.extremal import kite

from conftest import graphs, to_nx


def test_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g == complete(3)
    assert g.m == 3


def test_edgeless_and_duplicates():
    assert from_edge_list(2, []).m == 0
    g = from_edge_list(4, [(0, 1), (0, 1), (1, 0)])
    assert g.m == 1 and g.edges() == [(0, 1)]


@pytest.mark.parametrize(
    "n, edges, exc",
    [(3, [(0, 3)], VertexOutOfRange), (3, [(1, 1)], SelfLoop), (65, [], TooLarge), (3, [(-1, 0)], VertexOutOfRange)],
)
def test_from_edge_list_errors(n, edges, exc):
    with pytest.raises(exc):
        from_edge_list(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(BadParams):
        Graph(2, (0b10, 0))


def test_join_examples():
    assert join(complete(1), complete(1)) == complete(2)
    assert degree_sequence(join(complete(1), cycle(4))).degrees == (3, 3, 3, 3, 4)
    assert degree_sequence(join(complete(2), empty(3))).degrees == (2, 2, 2, 4, 4)


def test_disjoint_union_examples():
    two = disjoint_union(complete(1), complete(1))
    assert two.n == 2 and two.m == 0
    tt = disjoint_union(complete(3), complete(3))
    assert (tt.n, tt.m) == (6, 6)
    assert nx.number_connected_components(to_nx(tt)) == 2


def test_combined_order_cap():
    with pytest.raises(TooLarge):
        join(complete(40), complete(30))
    with pytest.raises(TooLarge):
        disjoint_union(empty(33), empty(32))


def test_families():
    assert set(complete(4).degrees()) == {3}
    assert set(cycle(5).degrees()) == {2}
    assert set(complete_bipartite(3, 3).degrees()) == {3}
    assert path(4).m == 3
    assert family("cycle", 6) == cycle(6)
    for bad in [("cycle", 2), ("nope", 3), ("complete", 0), ("complete_bipartite", 2)]:
        with pytest.raises(BadParams):
            family(*bad)


def test_degree_sequence_examples():
    assert degree_sequence(complete_bipartite(1, 3)).degrees == (1, 1, 1, 3)
    assert degree_sequence(kite(6, 0)).degrees == (1, 4, 4, 4, 4, 5)
    assert degree_sequence(cycle(6)).degrees == (2,) * 6
    assert degree_sequence(cycle(6))[1] == 2


def test_bipartition_examples():
    bp = bipartition(cycle(4))
    assert bp.sides() == ([0, 2], [1, 3])
    assert bipartition(cycle(5)) is None
    bp = bipartition(complete_bipartite(3, 3))
    assert bp.balanced and bp.X.bit_count() == 3


def test_bipartition_forest_components_put_first_vertex_in_x():
    g = from_edge_list(5, [(1, 2), (3, 4)])
    bp = bipartition(g)
    X, Y = bp.sides()
    assert 0 in X and 1 in X and 3 in X


def test_graph6_known_strings():
    assert emit_graph6(complete(1)) == "@"
    star = parse_graph6("D?{")
    assert star.n == 5
    assert star.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert emit_graph6(star) == "D?{"
    assert parse_graph6(">>graph6<<D?{\n") == star
    assert parse_graph6(emit_graph6(cycle(6))) == cycle(6)


@pytest.mark.parametrize("bad", ["", "D?", "D?{{", "D?|", "A\x01", "~~??????"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


@pytest.mark.parametrize("n", [62, 63, 64])
def test_graph6_large_orders_match_networkx(n):
    rng = random.Random(n)
    g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.1])
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


def test_graph6_matches_networkx_random_sample():
    rng = random.Random(0)
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        s = emit_graph6(g)
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert parse_graph6(s) == g


def test_edge_list_round_trip():
    g = kite(6, 1)
    text = emit_edge_list(g)
    assert text.splitlines()[0] == f"6 {g.m}"
    assert parse_edge_list(text) == g


@given(graphs())
def test_handshake(g):
    assert sum(degree_sequence(g)) == 2 * g.m


@given(graphs(max_n=8), graphs(max_n=8))
def test_join_counts(g, h):
    j = join(g, h)
    assert j.m == g.m + h.m + g.n * h.n
    assert j.degrees()[: g.n] == [d + h.n for d in g.degrees()]
    assert j.remove_vertices(range(g.n, g.n + h.n)) == g
    assert j.remove_vertices(range(g.n)) == h


@given(graphs())
def test_bipartition_is_proper(g):
    bp = bipartition(g)
    assert (bp is not None) == nx.is_bipartite(to_nx(g))
    if bp is not None:
        assert bp.X & bp.Y == 0 and bp.X | bp.Y == g.vertex_mask
        for v in range(g.n):
            own = bp.X if bp.X >> v & 1 else bp.Y
            assert g.adj[v] & own == 0


@settings(max_examples=300)
@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs())
def test_connectivity_matches_networkx(g):
    assert g.is_connected() == nx.is_connected(to_nx(g))
