import itertools

import pytest
from hypothesis import given, settings

from biclique_lab.bicliques import (
    Biclique,
    NoBicliquesError,
    enumerate_bicliques,
    enumerate_bicliques_oracle,
    is_biclique,
    mutually_included,
)
from biclique_lab.graph import Graph, GraphError, VertexSet, common_neighborhood, is_triangle_free, mask_of, named_graph
from biclique_lab.operators import kbm
from biclique_lab.patterns import maximal_cliques

from conftest import graphs, graphs_with_edges


def B(x, y):
    return Biclique.canonical(mask_of(x), mask_of(y))


def sides(family):
    return [(sorted(b.x_set(family.host.n).to_list()), sorted(b.y_set(family.host.n).to_list())) for b in family]


def test_enumeration_examples():
    assert sides(enumerate_bicliques(named_graph("cycle", 4))) == [([0, 2], [1, 3])]
    assert sides(enumerate_bicliques(named_graph("path", 4))) == [([0, 2], [1]), ([1, 3], [2])]
    c5 = enumerate_bicliques(named_graph("cycle", 5))
    assert set(c5.items) == {B([i], [(i - 1) % 5, (i + 1) % 5]) for i in range(5)}
    assert len(enumerate_bicliques(named_graph("co_domino"))) == 5


def test_oracle_examples():
    assert sides(enumerate_bicliques_oracle(named_graph("K1n", 3))) == [([0], [1, 2, 3])]
    assert sides(enumerate_bicliques_oracle(Graph.from_edges(2, [(0, 1)]))) == [([0], [1])]
    c4 = named_graph("cycle", 4)
    assert enumerate_bicliques_oracle(c4).items == enumerate_bicliques(c4).items


def test_edgeless_and_oversized_inputs():
    with pytest.raises(NoBicliquesError):
        enumerate_bicliques(Graph.empty(3))
    with pytest.raises(NoBicliquesError):
        enumerate_bicliques_oracle(Graph.empty(3))
    with pytest.raises(ValueError):
        enumerate_bicliques_oracle(named_graph("path", 17))


def test_isolated_vertices_belong_to_no_biclique():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    fam = enumerate_bicliques(g)
    assert all(not b.vertices >> 3 & 1 for b in fam)


def test_canonical_order_and_labels():
    fam = enumerate_bicliques(named_graph("cycle", 5))
    assert [b.sort_key() for b in fam] == sorted(b.sort_key() for b in fam)
    assert [b.label() for b in fam] == ["0 2 | 1", "0 | 1 4", "0 3 | 4", "1 3 | 2", "2 4 | 3"]
    assert all(b.x & (b.vertices & -b.vertices) for b in fam)


@settings(max_examples=200)
@given(graphs_with_edges(2, 8))
def test_enumerator_matches_oracle(g):
    assert enumerate_bicliques(g).items == enumerate_bicliques_oracle(g).items


@given(graphs_with_edges(2, 8))
def test_every_returned_pair_is_a_biclique(g):
    fam = enumerate_bicliques(g)
    assert len(set(fam.items)) == len(fam)
    for b in fam:
        assert is_biclique(g, b.x, b.y)


@given(graphs_with_edges(2, 8))
def test_common_neighbourhood_property_in_triangle_free_hosts(g):
    if not is_triangle_free(g):
        return
    for b in enumerate_bicliques(g):
        assert common_neighborhood(g, b.x).bits == b.y
        assert common_neighborhood(g, b.y).bits == b.x


def test_is_biclique_examples():
    c4 = named_graph("cycle", 4)
    assert is_biclique(c4, VertexSet.of(4, [0, 2]), VertexSet.of(4, [1, 3]))
    assert not is_biclique(c4, VertexSet.of(4, [0]), VertexSet.of(4, [1, 3]))
    assert is_biclique(named_graph("path", 4), VertexSet.of(4, [0, 2]), VertexSet.of(4, [1]))
    with pytest.raises(GraphError):
        is_biclique(c4, VertexSet.of(4, [0, 1]), VertexSet.of(4, [1, 3]))


@given(graphs_with_edges(2, 6))
def test_is_biclique_agrees_with_enumeration(g):
    found = set(enumerate_bicliques_oracle(g).items)
    full = g.full_mask
    for x in range(1, full + 1):
        y_all = full & ~x
        y = y_all
        while y:
            expect = Biclique.canonical(x, y) in found
            assert is_biclique(g, x, y) == expect
            y = (y - 1) & y_all


def test_mutually_included_examples():
    b0, b1, b2 = B([0], [4, 1]), B([1], [0, 2]), B([2], [1, 3])
    assert mutually_included(b0, b1)
    assert not mutually_included(b0, b2)
    assert mutually_included(B([0, 2], [1]), B([1, 3], [2]))
    with pytest.raises(ValueError):
        mutually_included(b0, b0)


@given(graphs_with_edges(2, 7))
def test_mutually_included_is_symmetric(g):
    fam = enumerate_bicliques(g)
    for p, q in itertools.combinations(fam, 2):
        assert mutually_included(p, q) == mutually_included(q, p)


def _labelings(p, q):
    return [q, q.swapped()]


@settings(max_examples=200)
@given(graphs_with_edges(2, 8))
def test_overlapping_x_sides_generate_a_biclique(g):
    if not is_triangle_free(g):
        return
    fam = enumerate_bicliques(g)
    found = set(fam.items)
    for p, q in itertools.permutations(fam, 2):
        if mutually_included(p, q):
            continue
        for pl in (p, p.swapped()):
            for ql in _labelings(p, q):
                s = pl.x & ql.x
                if not s:
                    continue
                y = common_neighborhood(g, s).bits
                assert Biclique.canonical(s, y) in found
                assert y & (pl.y | ql.y) == pl.y | ql.y


def _nested_labeling(members):
    first, rest = members[0], members[1:]
    for flips in itertools.product((False, True), repeat=len(rest)):
        chosen = [first] + [b.swapped() if f else b for b, f in zip(rest, flips)]
        chosen.sort(key=lambda b: bin(b.x).count("1"))
        if all(a.x != b.x and a.x & ~b.x == 0 for a, b in zip(chosen, chosen[1:])):
            return chosen
    return None


@settings(max_examples=150)
@given(graphs_with_edges(2, 7))
def test_pairwise_mutually_included_bicliques_nest(g):
    res = kbm(g)
    for clique in maximal_cliques(res.graph):
        members = [res.family[i] for i in range(res.graph.n) if clique >> i & 1]
        assert _nested_labeling(members) is not None
