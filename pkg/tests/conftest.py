import itertools

import pytest
from hypothesis import strategies as st

from biclique_lab.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_edges(draw, min_n=2, max_n=7):
    g = draw(graphs(min_n, max_n))
    if g.edge_count() == 0:
        return Graph.from_edges(g.n, [(0, 1)])
    return g


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def brute_isomorphic(g, h):
    """Reference isomorphism test over all permutations."""
    if g.n != h.n:
        return False
    eg = set(g.edges())
    eh = set(h.edges())
    for perm in itertools.permutations(range(g.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in eg} == eh:
            return True
    return False


@pytest.fixture
def report_line(capsys):
    def emit(text):
        with capsys.disabled():
            print(text)

    return emit
