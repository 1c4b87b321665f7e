import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from randicham.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edge_list(len(index), [(index[u], index[v]) for u, v in h.edges()])


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def atlas_connected():
    """Every connected graph on 3..7 vertices, up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if 3 <= h.number_of_nodes() <= 7 and nx.is_connected(h):
            out.append(from_nx(h))
    return out


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
