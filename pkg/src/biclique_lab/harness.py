"""Theorem checkers over instance streams, producing replayable reports."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Callable

from .bicliques import enumerate_bicliques, enumerate_bicliques_oracle
from .formats import parse_graph, parse_poset, render_graph, render_poset
from .generate import InstanceSpec, connected_classes, generate
from .graph import Graph, bits, is_bipartite, is_isomorphic, is_triangle_free, named_graph, popcount, square
from .operators import kb_from_family, kbm_from_family
from .patterns import clique_ordering_check, has_square_root, induced_stars, is_net_star_free, k1n_containment_check
from .posets import (
    Poset,
    biclique_poset,
    canonical_biclique,
    canonical_bicliques_of_GP,
    comparability_graph,
    is_iic,
    pred_succ_graph,
)

CHECKED, FAILED, SKIPPED, UNVERIFIED = "checked", "failed", "skipped", "unverified"

THREADS_ENV = "BICLIQUE_LAB_THREADS"


@dataclass
class VerificationReport:
    check: str
    spec: dict | None
    generated: int = 0
    checked: int = 0
    skipped: int = 0
    unverified: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_record(self, timing: bool = True) -> dict:
        rec = {
            "check": self.check,
            "spec": self.spec,
            "verdict": "pass" if self.passed else "fail",
            "generated": self.generated,
            "checked": self.checked,
            "skipped": self.skipped,
            "unverified": self.unverified,
            "failures": self.failures,
            "notes": self.notes,
        }
        if timing:
            rec["elapsed_ms"] = self.elapsed_ms
        return rec

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_record(timing), sort_keys=True)


def _serialize(instance) -> str:
    return render_poset(instance) if isinstance(instance, Poset) else render_graph(instance)


# --- per-instance predicates --------------------------------------------------
# each returns (status, witness); witness is a short string on failure


def _triangle_free_pair(g: Graph):
    family = enumerate_bicliques(g)
    return kb_from_family(family), kbm_from_family(family)


def kbm_square_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if not is_triangle_free(g):
        return SKIPPED, "has a triangle"
    h, w = _triangle_free_pair(g)
    sq = square(w.graph)
    if sq != h.graph:
        diff = sorted(set(sq.edges()) ^ set(h.graph.edges()))
        return FAILED, f"KB and KB_m^2 differ on edges {diff}"
    return CHECKED, None


def netstar_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    w = kbm_from_family(enumerate_bicliques(g))
    emb = is_net_star_free(w.graph)
    if emb is not None:
        return FAILED, f"induced net* at KB_m vertices {list(emb.map)}"
    return CHECKED, None


def clique_ordering_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    w = kbm_from_family(enumerate_bicliques(g))
    bad = clique_ordering_check(w.graph)
    if bad is None:
        return CHECKED, None
    detail = f"clique {list(bits(bad.clique))} traces {[list(bits(t)) for t in bad.traces]}"
    if not bad.conclusive:
        return UNVERIFIED, detail
    return FAILED, detail


def k1n_instance(g: Graph, n_max: int = 2):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if not is_triangle_free(g):
        return SKIPPED, "has a triangle"
    h, w = _triangle_free_pair(g)
    for k in range(2, n_max + 1):
        for center, leaves in induced_stars(h.graph, k):
            if k1n_containment_check(h.graph, w.graph, center, leaves) is None:
                return FAILED, f"star center {center} leaves {list(leaves)} not completed"
    return CHECKED, None


def _independent_sets(h: Graph, lo: int, hi: int):
    """Independent sets of size ``lo..hi`` as bitmasks, in lexicographic order."""
    out = []

    def rec(chosen: int, size: int, allowed: int) -> None:
        if size >= lo:
            out.append(chosen)
        if size == hi:
            return
        for v in bits(allowed):
            rec(chosen | 1 << v, size + 1, allowed & ~h.adj[v] & ~((2 << v) - 1))

    rec(0, 0, h.full_mask)
    return out


MAX_INDEPENDENT_SET = 6


def independent_set_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if not is_triangle_free(g):
        return SKIPPED, "has a triangle"
    h = kb_from_family(enumerate_bicliques(g)).graph
    for s in _independent_sets(h, 3, MAX_INDEPENDENT_SET):
        inter, union = h.full_mask, 0
        for v in bits(s):
            inter &= h.adj[v]
            union |= h.adj[v]
        if popcount(inter) >= 3 and popcount(union) <= popcount(s):
            return FAILED, f"independent set {list(bits(s))} has union of neighbourhoods {list(bits(union))}"
    return CHECKED, None


def conjecture_instance(g: Graph):
    """No class of >= 2 false twins whose common neighbourhood is at most as large."""
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if not is_triangle_free(g):
        return SKIPPED, "has a triangle"
    h = kb_from_family(enumerate_bicliques(g)).graph
    if is_isomorphic(h, named_graph("diamond")) is not None:
        return CHECKED, None
    classes: dict[int, int] = {}
    for v in range(h.n):
        classes[h.adj[v]] = classes.get(h.adj[v], 0) | 1 << v
    for nbhd, twins in sorted(classes.items()):
        if popcount(twins) >= 2 and popcount(nbhd) <= popcount(twins):
            return FAILED, f"vertices {list(bits(twins))} share neighbourhood {list(bits(nbhd))}"
    return CHECKED, None


def bipartite_forward_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if is_bipartite(g) is None:
        return SKIPPED, "not bipartite"
    family = enumerate_bicliques(g)
    poset = biclique_poset(g, family)
    w = kbm_from_family(family).graph
    if comparability_graph(poset) != w:
        return FAILED, "comparability graph of the biclique poset differs from KB_m"
    wit = is_iic(poset)
    if wit is not None:
        return FAILED, f"biclique poset not IIC: {wit.kind} pair {list(wit.pair)}"
    return CHECKED, None


def bipartite_reverse_instance(p: Poset):
    if is_iic(p) is not None:
        return SKIPPED, "not IIC"
    gp, _ = pred_succ_graph(p)
    family = enumerate_bicliques(gp)
    if family.items != canonical_bicliques_of_GP(p).items:
        return FAILED, "bicliques of G_P are not exactly the X_v Y_v"
    phi = [family.index(canonical_biclique(p, v)) for v in range(p.m)]
    comp = comparability_graph(p)
    w = kbm_from_family(family).graph
    h = kb_from_family(family).graph
    sq = square(comp)
    for u, v in combinations(range(p.m), 2):
        if comp.has_edge(u, v) != w.has_edge(phi[u], phi[v]):
            return FAILED, f"KB_m(G_P) disagrees with comparability at ({u}, {v})"
        if sq.has_edge(u, v) != h.has_edge(phi[u], phi[v]):
            return FAILED, f"KB(G_P) disagrees with the squared comparability graph at ({u}, {v})"
    return CHECKED, None


def oracle_instance(g: Graph):
    if not any(g.adj):
        return SKIPPED, "edgeless"
    if enumerate_bicliques(g).items != enumerate_bicliques_oracle(g).items:
        return FAILED, "enumerator and brute-force oracle disagree"
    return CHECKED, None


@dataclass(frozen=True)
class Check:
    name: str
    predicate: Callable
    instance_type: str = "graph"
    description: str = ""


REGISTRY: dict[str, Check] = {
    c.name: c
    for c in [
        Check("kbm_square", kbm_square_instance, description="KB(G) = KB_m(G)^2 for triangle-free G"),
        Check("netstar_free", netstar_instance, description="KB_m(G) has no induced net*"),
        Check("clique_ordering", clique_ordering_instance, description="cliques of KB_m(G) admit anchored orderings"),
        Check("k1n_corollary", k1n_instance, description="induced stars of KB(G) complete to D_n / D_n^-"),
        Check("independent_set", independent_set_instance, description="independent sets with >= 3 common neighbours"),
        Check("conjecture_triangle_free", conjecture_instance, description="no small false-twin classes in KB(G)"),
        Check("bipartite_forward", bipartite_forward_instance, description="KB_m(bipartite) is IIC-comparability"),
        Check(
            "bipartite_reverse",
            bipartite_reverse_instance,
            instance_type="poset",
            description="IIC poset P: bicliques of G_P are the X_v Y_v and KB_m(G_P) matches",
        ),
        Check("oracle", oracle_instance, description="enumerator agrees with the brute-force oracle"),
    ]
}

SEPARATING = "separating_examples"
CHECK_NAMES = tuple(REGISTRY) + (SEPARATING,)


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _evaluate(predicate, instances: list, workers: int) -> list:
    if workers <= 1 or len(instances) < 2:
        return [predicate(x) for x in instances]
    from multiprocessing import Pool

    with Pool(workers) as pool:
        return pool.map(predicate, instances, chunksize=max(1, len(instances) // (4 * workers)))


def run_check(name: str, spec: InstanceSpec | None = None, **params) -> VerificationReport:
    """Run a registered checker over ``spec``'s instance stream."""
    if name == SEPARATING:
        return check_separating_examples(**params)
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    if spec is None:
        raise ValueError(f"check {name!r} needs an instance spec")
    check = REGISTRY[name]
    if spec.instance_type != check.instance_type:
        raise ValueError(f"check {name!r} runs on {check.instance_type}s, spec yields {spec.instance_type}s")
    predicate = partial(check.predicate, **params) if params else check.predicate
    start = time.perf_counter()
    instances = list(generate(spec))
    outcomes = _evaluate(predicate, instances, worker_count())
    spec_record = spec.to_dict()
    if params:
        spec_record["params"] = dict(sorted(params.items()))
    report = VerificationReport(name, spec_record, generated=len(instances))
    for inst, (status, witness) in zip(instances, outcomes):
        if status == SKIPPED:
            report.skipped += 1
            continue
        report.checked += 1
        if status == UNVERIFIED:
            report.unverified += 1
        elif status == FAILED:
            report.failures.append({"instance": _serialize(inst), "witness": witness})
    report.failures.sort(key=lambda f: (f["instance"], f["witness"]))
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def replay(name: str, instance_text: str, **params) -> tuple[str, str | None]:
    """Re-run one checker on a serialized instance taken from a report."""
    check = REGISTRY[name]
    inst = parse_poset(instance_text) if check.instance_type == "poset" else parse_graph(instance_text)
    return check.predicate(inst, **params)


# the co-domino / 4-wheel pair and the net^2 sweep


def check_separating_examples(max_n: int = 7) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(SEPARATING, {"kind": "exhaustive-connected", "n": max_n, "n_min": 1})
    co_domino, wheel = named_graph("co_domino"), named_graph("wheel4")
    report.generated += 2
    report.checked += 2
    kb_cd = kb_from_family(enumerate_bicliques(co_domino)).graph
    if is_isomorphic(kb_cd, wheel) is None:
        report.failures.append({"instance": render_graph(co_domino), "witness": "KB(co-domino) is not the 4-wheel"})
    root = has_square_root(wheel)
    if root is not None:
        report.failures.append({"instance": render_graph(wheel), "witness": f"square root {root.edges()}"})
    net_sq = square(named_graph("net"))
    for n in range(1, max_n + 1):
        for g in connected_classes(n):
            report.generated += 1
            if not any(g.adj):
                report.skipped += 1
                continue
            report.checked += 1
            h = kb_from_family(enumerate_bicliques(g)).graph
            if is_isomorphic(h, net_sq) is not None:
                report.failures.append({"instance": render_graph(g), "witness": "KB(g) is isomorphic to net^2"})
    report.notes.append(
        f"net^2 absent among KB(g) for connected g on <= {max_n} vertices: bounded evidence, not a proof"
    )
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def check_kbm_square(spec: InstanceSpec) -> VerificationReport:
    return run_check("kbm_square", spec)


def check_netstar_free(spec: InstanceSpec) -> VerificationReport:
    return run_check("netstar_free", spec)


def check_clique_ordering(spec: InstanceSpec) -> VerificationReport:
    return run_check("clique_ordering", spec)


def check_k1n_corollary(spec: InstanceSpec, n_max: int = 2) -> VerificationReport:
    return run_check("k1n_corollary", spec, n_max=n_max)


def check_independent_set_theorem(spec: InstanceSpec) -> VerificationReport:
    return run_check("independent_set", spec)


def check_conjecture_triangle_free(spec: InstanceSpec) -> VerificationReport:
    return run_check("conjecture_triangle_free", spec)


def check_bipartite_forward(spec: InstanceSpec) -> VerificationReport:
    return run_check("bipartite_forward", spec)


def check_bipartite_reverse(spec: InstanceSpec) -> VerificationReport:
    return run_check("bipartite_reverse", spec)
