"""Instance streams: exhaustive isomorphism-class sweeps and seeded random graphs."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterator

from .formats import render_graph6
from .graph import Graph, bits, find_triangle, invariant, is_bipartite, is_isomorphic
from .posets import Poset, poset_isomorphism

EXHAUSTIVE_GRAPH_KINDS = ("exhaustive-connected", "exhaustive-bipartite", "exhaustive-triangle-free")
RANDOM_KINDS = ("random-gnp", "random-bipartite", "random-triangle-free")
POSET_KINDS = ("exhaustive-posets",)
KINDS = EXHAUSTIVE_GRAPH_KINDS + POSET_KINDS + RANDOM_KINDS

MAX_EXHAUSTIVE_N = 8
MAX_EXHAUSTIVE_M = 6


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    """What to generate.

    Exhaustive kinds sweep every isomorphism class of connected graphs (or of
    posets) with ``n_min <= size <= n``; ``n_min`` defaults to ``n``.  Random
    kinds draw ``samples`` graphs on exactly ``n`` vertices with edge
    probability ``p`` from ``random.Random(seed)``.
    """

    kind: str
    n: int
    n_min: int | None = None
    p: float = 0.5
    samples: int = 0
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown instance kind {self.kind!r}")
        lo = self.low
        if lo < 1 or lo > self.n:
            raise SpecError(f"need 1 <= n_min <= n, got n_min={lo}, n={self.n}")
        if self.kind in EXHAUSTIVE_GRAPH_KINDS and self.n > MAX_EXHAUSTIVE_N:
            raise SpecError(f"exhaustive graph sweeps are limited to n <= {MAX_EXHAUSTIVE_N}")
        if self.kind in POSET_KINDS and self.n > MAX_EXHAUSTIVE_M:
            raise SpecError(f"exhaustive poset sweeps are limited to m <= {MAX_EXHAUSTIVE_M}")
        if self.kind in RANDOM_KINDS:
            if self.seed is None:
                raise SpecError("random kinds require a seed")
            if not 0 <= self.seed < 2**64:
                raise SpecError("seed must be a 64-bit unsigned integer")
            if not 0.0 <= self.p <= 1.0:
                raise SpecError("edge probability must lie in [0, 1]")
            if self.samples < 1:
                raise SpecError("random kinds need samples >= 1")

    @property
    def low(self) -> int:
        return self.n if self.n_min is None else self.n_min

    @property
    def instance_type(self) -> str:
        return "poset" if self.kind in POSET_KINDS else "graph"

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.kind not in RANDOM_KINDS:
            for k in ("p", "samples", "seed"):
                d.pop(k)
        return d


# --- exhaustive classes -----------------------------------------------------


def _dedup(candidates) -> list:
    """Keep one graph per isomorphism class, bucketing by invariant first."""
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in candidates:
        bucket = buckets.setdefault(invariant(g), [])
        if any(is_isomorphic(g, r) is not None for r in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return sorted(reps, key=lambda g: (g.edge_count(), render_graph6(g)))


def _admissible(cls: str, g: Graph, nbrs: int) -> bool:
    if cls == "triangle-free":
        return all(not g.adj[v] & nbrs for v in bits(nbrs))
    return True


@lru_cache(maxsize=None)
def connected_classes(n: int, cls: str = "all") -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices.

    ``cls`` restricts to ``"bipartite"`` or ``"triangle-free"`` graphs.  Each
    class is hereditary and every connected graph has a vertex whose removal
    leaves it connected, so extending the ``n-1`` representatives by one vertex
    with every nonempty neighbourhood reaches every class.
    """
    if cls not in ("all", "bipartite", "triangle-free"):
        raise SpecError(f"unknown graph class {cls!r}")
    if n < 1 or n > MAX_EXHAUSTIVE_N:
        raise SpecError(f"exhaustive sweeps need 1 <= n <= {MAX_EXHAUSTIVE_N}")
    if n == 1:
        return (Graph.empty(1),)
    candidates = []
    for base in connected_classes(n - 1, cls):
        for nbrs in range(1, 1 << (n - 1)):
            if not _admissible(cls, base, nbrs):
                continue
            adj = [row | (nbrs >> v & 1) << (n - 1) for v, row in enumerate(base.adj)] + [nbrs]
            g = Graph(n, adj)
            if cls == "bipartite" and is_bipartite(g) is None:
                continue
            candidates.append(g)
    return tuple(_dedup(candidates))


@lru_cache(maxsize=None)
def poset_classes(m: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class of posets on ``m`` elements.

    Every poset arises from one on ``m-1`` elements by adding a maximal element
    above a down-closed set.
    """
    if m < 1 or m > MAX_EXHAUSTIVE_M:
        raise SpecError(f"exhaustive poset sweeps need 1 <= m <= {MAX_EXHAUSTIVE_M}")
    if m == 1:
        return (Poset(1, [1]),)
    reps: list[Poset] = []
    buckets: dict[tuple, list[Poset]] = {}
    for base in poset_classes(m - 1):
        k = m - 1
        for below in range(1 << k):
            if any(base.down[x] & ~below for x in bits(below)):
                continue
            up = [row | (below >> x & 1) << k for x, row in enumerate(base.up)] + [1 << k]
            p = Poset(m, up)
            key = (
                tuple(sorted((bin(p.up[x]).count("1"), bin(p.down[x]).count("1")) for x in range(m))),
            )
            bucket = buckets.setdefault(key, [])
            if any(poset_isomorphism(p, q) is not None for q in bucket):
                continue
            bucket.append(p)
            reps.append(p)
    return tuple(sorted(reps, key=lambda p: (len(p.pairs()), p.pairs())))


# --- random graphs ----------------------------------------------------------


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and rng.random() < p]
    return Graph.from_edges(n, edges)


def make_triangle_free(g: Graph) -> Graph:
    """Delete the smallest edge of the smallest triangle until none is left."""
    adj = list(g.adj)
    while True:
        tri = find_triangle(Graph(g.n, adj))
        if tri is None:
            return Graph(g.n, adj)
        a, b, _ = tri
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)


def random_triangle_free(n: int, p: float, rng: random.Random) -> Graph:
    return make_triangle_free(random_gnp(n, p, rng))


_RANDOM = {
    "random-gnp": random_gnp,
    "random-bipartite": random_bipartite,
    "random-triangle-free": random_triangle_free,
}

_EXHAUSTIVE = {
    "exhaustive-connected": "all",
    "exhaustive-bipartite": "bipartite",
    "exhaustive-triangle-free": "triangle-free",
}


def generate(spec: InstanceSpec) -> Iterator[Graph | Poset]:
    if spec.kind in _RANDOM:
        rng = random.Random(spec.seed)
        make = _RANDOM[spec.kind]
        for _ in range(spec.samples):
            yield make(spec.n, spec.p, rng)
    elif spec.kind in _EXHAUSTIVE:
        for n in range(spec.low, spec.n + 1):
            yield from connected_classes(n, _EXHAUSTIVE[spec.kind])
    else:
        for m in range(spec.low, spec.n + 1):
            yield from poset_classes(m)
