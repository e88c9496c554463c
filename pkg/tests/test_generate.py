import itertools

import pytest

from biclique_lab.generate import (
    InstanceSpec,
    SpecError,
    connected_classes,
    generate,
    make_triangle_free,
    poset_classes,
)
from biclique_lab.graph import Graph, is_bipartite, is_triangle_free
from biclique_lab.posets import Poset

from conftest import all_labeled_graphs


def _canonical(g):
    return min(
        tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        for perm in itertools.permutations(range(g.n))
    )


def _sweep_count(n, keep):
    return len({_canonical(g) for g in all_labeled_graphs(n) if g.is_connected() and keep(g)})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_class_counts_match_labeled_sweep(n):
    assert len(connected_classes(n)) == _sweep_count(n, lambda g: True)
    assert len(connected_classes(n, "triangle-free")) == _sweep_count(n, is_triangle_free)
    assert len(connected_classes(n, "bipartite")) == _sweep_count(n, lambda g: is_bipartite(g) is not None)


def test_class_counts_match_published_totals():
    # OEIS A001349, A024607, A005142
    assert [len(connected_classes(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [len(connected_classes(n, "triangle-free")) for n in range(1, 9)] == [1, 1, 1, 3, 6, 19, 59, 267]
    assert [len(connected_classes(n, "bipartite")) for n in range(1, 9)] == [1, 1, 1, 3, 5, 17, 44, 182]


def _poset_canonical(p):
    return min(
        tuple(sorted((perm[u], perm[v]) for u, v in p.pairs())) for perm in itertools.permutations(range(p.m))
    )


def test_poset_counts():
    # OEIS A000112
    assert [len(poset_classes(m)) for m in range(1, 7)] == [1, 2, 5, 16, 63, 318]
    # labeled sweep for m = 4: every relation closed to a poset
    pairs = [(u, v) for u in range(4) for v in range(4) if u != v]
    seen = set()
    for mask in range(1 << len(pairs)):
        rel = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        try:
            p = Poset.from_pairs(4, rel)
        except ValueError:
            continue
        seen.add(_poset_canonical(p))
    assert len(seen) == 16


def test_exhaustive_spec_examples():
    assert len(list(generate(InstanceSpec("exhaustive-connected", 4)))) == 6
    assert len(list(generate(InstanceSpec("exhaustive-triangle-free", 5)))) == _sweep_count(5, is_triangle_free) == 6
    assert len(list(generate(InstanceSpec("exhaustive-connected", 4, n_min=1)))) == 1 + 1 + 2 + 6
    assert all(g.is_connected() for g in generate(InstanceSpec("exhaustive-connected", 6, n_min=1)))


def test_random_streams_are_deterministic():
    spec = InstanceSpec("random-triangle-free", 10, p=0.3, samples=20, seed=42)
    first = list(generate(spec))
    assert first == list(generate(spec))
    assert first != list(generate(InstanceSpec("random-triangle-free", 10, p=0.3, samples=20, seed=43)))
    assert all(is_triangle_free(g) and g.n == 10 for g in first)
    assert all(is_bipartite(g) is not None for g in generate(InstanceSpec("random-bipartite", 9, p=0.6, samples=20, seed=1)))


def test_make_triangle_free_keeps_free_graphs():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert make_triangle_free(g) == g
    k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
    out = make_triangle_free(k4)
    assert is_triangle_free(out) and set(out.edges()) <= set(k4.edges())


def test_spec_validation():
    with pytest.raises(SpecError):
        InstanceSpec("exhaustive-everything", 3)
    with pytest.raises(SpecError):
        InstanceSpec("exhaustive-connected", 9)
    with pytest.raises(SpecError):
        InstanceSpec("exhaustive-posets", 7)
    with pytest.raises(SpecError):
        InstanceSpec("random-gnp", 5, samples=3)
    with pytest.raises(SpecError):
        InstanceSpec("random-gnp", 5, samples=3, seed=1, p=1.5)
    with pytest.raises(SpecError):
        InstanceSpec("exhaustive-connected", 4, n_min=5)
    assert InstanceSpec("exhaustive-connected", 4).to_dict() == {"kind": "exhaustive-connected", "n": 4, "n_min": None}
    assert InstanceSpec("exhaustive-posets", 3).instance_type == "poset"
