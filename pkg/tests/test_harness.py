import json

import pytest

from biclique_lab import harness
from biclique_lab.generate import InstanceSpec
from biclique_lab.graph import named_graph, square
from biclique_lab.harness import (
    CHECK_NAMES,
    CHECKED,
    FAILED,
    REGISTRY,
    SKIPPED,
    Check,
    check_separating_examples,
    replay,
    run_check,
)

SMALL_TF = InstanceSpec("exhaustive-triangle-free", 5, n_min=1)


def sabotaged(g):
    """Claims every graph with a vertex of degree >= 3 is a counterexample."""
    if max(g.degree(v) for v in range(g.n)) >= 3:
        return FAILED, "degree three"
    return CHECKED, None


@pytest.mark.parametrize("name", [n for n in REGISTRY if REGISTRY[n].instance_type == "graph"])
def test_counts_add_up_on_small_graphs(name):
    spec = InstanceSpec("exhaustive-connected", 5, n_min=1)
    report = run_check(name, spec)
    assert report.passed
    assert report.checked + report.skipped == report.generated == 1 + 1 + 2 + 6 + 21
    assert report.unverified <= report.checked


def test_poset_check_counts():
    report = run_check("bipartite_reverse", InstanceSpec("exhaustive-posets", 4, n_min=1))
    assert report.passed and report.generated == 1 + 2 + 5 + 16
    assert report.skipped > 0  # the crown is among the 4-element posets


def test_instance_type_mismatch():
    with pytest.raises(ValueError):
        run_check("bipartite_reverse", SMALL_TF)
    with pytest.raises(ValueError):
        run_check("kbm_square", InstanceSpec("exhaustive-posets", 3))
    with pytest.raises(KeyError):
        run_check("nonsense", SMALL_TF)


def test_sabotaged_check_reports_replayable_failures(monkeypatch):
    monkeypatch.setitem(REGISTRY, "kbm_square", Check("kbm_square", sabotaged))
    report = run_check("kbm_square", SMALL_TF)
    assert not report.passed
    assert report.failures == sorted(report.failures, key=lambda f: (f["instance"], f["witness"]))
    for failure in report.failures:
        assert replay("kbm_square", failure["instance"]) == (FAILED, failure["witness"])
    assert json.loads(report.to_json())["verdict"] == "fail"


def test_skip_reasons():
    assert harness.kbm_square_instance(named_graph("complete", 3))[0] == SKIPPED
    assert harness.bipartite_forward_instance(named_graph("cycle", 5))[0] == SKIPPED
    from biclique_lab.graph import Graph

    assert harness.oracle_instance(Graph.empty(3))[0] == SKIPPED


def test_predicates_catch_planted_errors(monkeypatch):
    # a square that drops one edge must make kbm_square fail
    real = harness.square

    def broken(g):
        sq = real(g)
        edges = sq.edges()[1:]
        from biclique_lab.graph import Graph

        return Graph.from_edges(sq.n, edges)

    monkeypatch.setattr(harness, "square", broken)
    status, witness = harness.kbm_square_instance(named_graph("cycle", 5))
    assert status == FAILED and "differ" in witness


def test_json_is_deterministic_without_timing():
    spec = InstanceSpec("random-triangle-free", 8, p=0.3, samples=30, seed=5)
    a = run_check("kbm_square", spec).to_json(timing=False)
    b = run_check("kbm_square", spec).to_json(timing=False)
    assert a == b
    rec = json.loads(a)
    assert "elapsed_ms" not in rec
    assert rec["spec"] == {"kind": "random-triangle-free", "n": 8, "n_min": None, "p": 0.3, "samples": 30, "seed": 5}


def test_parallel_run_matches_serial(monkeypatch):
    spec = InstanceSpec("exhaustive-connected", 6, n_min=1)
    serial = run_check("netstar_free", spec).to_json(timing=False)
    monkeypatch.setenv(harness.THREADS_ENV, "2")
    assert harness.worker_count() == 2
    assert run_check("netstar_free", spec).to_json(timing=False) == serial
    monkeypatch.setenv(harness.THREADS_ENV, "many")
    assert harness.worker_count() == 1


def test_params_recorded():
    report = run_check("k1n_corollary", SMALL_TF, n_max=3)
    assert report.passed and report.spec["params"] == {"n_max": 3}


def test_separating_examples_small():
    report = check_separating_examples(max_n=5)
    assert report.passed
    assert report.generated == 2 + 1 + 1 + 2 + 6 + 21
    assert "not a proof" in report.notes[0]


def test_separating_examples_detect_a_planted_net_square(monkeypatch):
    # pretend KB of the first connected graph with an edge is net^2
    real = harness.kb_from_family
    net_sq = square(named_graph("net"))

    class Fake:
        graph = net_sq

    monkeypatch.setattr(harness, "kb_from_family", lambda fam: Fake if fam.host.n == 2 else real(fam))
    report = check_separating_examples(max_n=3)
    assert not report.passed


def test_check_names():
    assert set(CHECK_NAMES) == set(REGISTRY) | {"separating_examples"}
