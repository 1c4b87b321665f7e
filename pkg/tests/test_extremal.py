import math

import pytest

from randicham.errors import BadParams
from randicham.extremal import ExtremalSpec, bipartite_deleted, kite, split_extremal
from randicham.graph import bipartition, degree_sequence
from randicham.indices import zeroth_order_randic
from randicham.oracle import hamiltonian_cycle, is_k_hamiltonian
from randicham.thresholds import bipartite_bound, k_hamiltonian_bound

ALPHAS = [-2, -1, -0.5, 0.5, 1, 2, 3]


def test_examples():
    assert degree_sequence(kite(5, 0)).degrees == (1, 3, 3, 3, 4)
    assert degree_sequence(split_extremal(5, 0)).degrees == (2, 2, 2, 4, 4)
    assert degree_sequence(split_extremal(6, 0)).degrees == (2, 2, 3, 3, 5, 5)
    assert degree_sequence(split_extremal(6, 1)).degrees == (3, 3, 3, 5, 5, 5)
    assert degree_sequence(bipartite_deleted(3, 1)).degrees == (1, 2, 2, 3, 3, 3)


@pytest.mark.parametrize("a", ALPHAS)
def test_index_equals_bounds(a):
    for n in range(5, 21):
        for k in range(0, n - 2):
            mid = (n - k - 1) // 2
            assert math.isclose(zeroth_order_randic(kite(n, k), a), k_hamiltonian_bound(1, n, k, a), rel_tol=1e-12)
            assert math.isclose(
                zeroth_order_randic(split_extremal(n, k), a), k_hamiltonian_bound(mid, n, k, a), rel_tol=1e-12
            )
    for n in range(2, 21):
        for s in range(1, n):
            assert math.isclose(zeroth_order_randic(bipartite_deleted(n, s), a), bipartite_bound(s, n, a), rel_tol=1e-12)


def test_connected_and_not_hamiltonian():
    for n in range(5, 13):
        for k in range(0, n - 2):
            for g in (kite(n, k), split_extremal(n, k)):
                assert g.is_connected() and g.n == n
                if k <= 3 and n <= 12:
                    assert not is_k_hamiltonian(g, k)
    for n in range(2, 9):
        for s in range(1, n):
            g = bipartite_deleted(n, s)
            assert g.is_connected() and bipartition(g).balanced
            assert not hamiltonian_cycle(g).hamiltonian


def test_errors_and_builder():
    with pytest.raises(BadParams):
        kite(4, 2)
    with pytest.raises(BadParams):
        bipartite_deleted(3, 3)
    with pytest.raises(BadParams):
        ExtremalSpec("nope", 5).build()
    assert ExtremalSpec("split", 7, k=1).build() == split_extremal(7, 1)
    assert ExtremalSpec("bipartite", 4, s=2).build() == bipartite_deleted(4, 2)
