import itertools
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from raagcoh.graphs import Graph

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def graph_classes(n):
    """One graph per isomorphism class on exactly n vertices (n <= 7),
    taken from the networkx atlas so the enumeration is independent of
    this package's isomorphism code."""
    return tuple(Graph.from_edges(n, G.edges()) for G in nx.graph_atlas_g() if G.number_of_nodes() == n)


def classes_up_to(n):
    return [g for k in range(n + 1) for g in graph_classes(k)]


def labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def brute_force_isomorphic(g, h):
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return any(g.permuted(perm).edges == h.edges for perm in itertools.permutations(range(g.n)))


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def P3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def P4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star3():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def C4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def K2():
    return Graph.from_edges(2, [(0, 1)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
