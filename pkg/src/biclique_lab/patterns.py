"""Induced-subgraph search and structural checks on KB / KB_m graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .graph import Graph, GraphError, bits, named_graph, popcount, square

INDUCED = "induced"
SUBGRAPH = "subgraph"


@dataclass(frozen=True)
class Embedding:
    """``map[i]`` is the host vertex playing pattern vertex ``i``."""

    map: tuple[int, ...]
    mode: str = INDUCED


def find_induced(host: Graph, pattern: Graph, limit: int | None = 1, mode: str = INDUCED) -> list[Embedding]:
    """Up to ``limit`` embeddings of ``pattern`` in ``host`` (``None`` for all).

    Pattern vertices are placed in a connectivity-first order and host
    candidates are tried in increasing index, so the output order is fixed.
    """
    if mode not in (INDUCED, SUBGRAPH):
        raise ValueError(f"unknown embedding mode {mode!r}")
    k = pattern.n
    if k > host.n:
        return []
    order: list[int] = []
    placed = 0
    while len(order) < k:
        best = max(
            (v for v in range(k) if not placed >> v & 1),
            key=lambda v: (popcount(pattern.adj[v] & placed), pattern.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
    pdeg = [pattern.degree(v) for v in range(k)]
    hdeg = [host.degree(v) for v in range(host.n)]
    out: list[Embedding] = []
    phi = [-1] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            out.append(Embedding(tuple(phi), mode))
            return limit is not None and len(out) >= limit
        p = order[i]
        for h in range(host.n):
            if used >> h & 1 or hdeg[h] < pdeg[p]:
                continue
            ok = True
            for j in range(i):
                q = order[j]
                if pattern.adj[p] >> q & 1:
                    if not host.adj[h] >> phi[q] & 1:
                        ok = False
                        break
                elif mode == INDUCED and host.adj[h] >> phi[q] & 1:
                    ok = False
                    break
            if not ok:
                continue
            phi[p] = h
            used |= 1 << h
            stop = extend(i + 1)
            used &= ~(1 << h)
            phi[p] = -1
            if stop:
                return True
        return False

    extend(0)
    return out


NET_STAR_MASKS = tuple(range(8))


def is_net_star_free(h: Graph) -> Embedding | None:
    """First induced net* (any of the 8 pendant-edge variants) in ``h``, or None."""
    for mask in NET_STAR_MASKS:
        found = find_induced(h, named_graph("net_star", mask), limit=1)
        if found:
            return found[0]
    return None


# --- clique ordering --------------------------------------------------------


def maximal_cliques(g: Graph) -> list[int]:
    """Maximal cliques as bitmasks, sorted by their member lists."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: popcount(p & g.adj[u]))
        for v in bits(p & ~g.adj[pivot]):
            bk(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.full_mask, 0)
    return sorted(out, key=lambda c: list(bits(c)))


@dataclass(frozen=True)
class OrderingFailure:
    """A clique with no admissible ordering.

    ``traces`` are the sets ``N(Q) & clique`` (bitmasks) that cannot all be made
    prefixes or suffixes at once.  ``conclusive`` is False when the large-clique
    reduction could neither confirm nor refute an ordering.
    """

    clique: int
    traces: tuple[int, ...]
    conclusive: bool = True


def _traces(h: Graph, clique: int) -> list[int]:
    out = set()
    for q in bits(h.full_mask & ~clique):
        t = h.adj[q] & clique
        if t and t != clique:
            out.add(t)
    return sorted(out)


def _order_ok(order: tuple[int, ...], traces: list[int]) -> bool:
    k = len(order)
    prefix = [0] * (k + 1)
    for i, v in enumerate(order):
        prefix[i + 1] = prefix[i] | 1 << v
    full = prefix[k]
    pre = set(prefix[1:k])
    suf = {full & ~p for p in prefix[1:k]}
    return all(t in pre or t in suf for t in traces)


def _exhaustive_ordering(clique: int, traces: list[int]) -> tuple[int, ...] | None:
    members = list(bits(clique))
    first = members[0]
    for perm in permutations(members):
        # an ordering and its reverse are equivalent
        if perm[-1] == first and len(perm) > 1:
            continue
        if _order_ok(perm, traces):
            return perm
    return None


def _anchored_ordering(clique: int, traces: list[int]) -> tuple[tuple[int, ...] | None, bool]:
    """Decide whether every trace can be a prefix or a suffix of one ordering.

    Two traces on the same end must be nested, and a nested pair cannot sit on
    opposite ends (a proper prefix and a proper suffix only overlap when they
    cover the clique, impossible if one contains the other).  So incomparable
    traces take opposite ends and comparable ones the same end; the ends follow
    by 2-colouring.  Returns ``(ordering, conclusive)``.
    """
    k = len(traces)
    colour = [-1] * k
    for s in range(k):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            a = stack.pop()
            for b in range(k):
                if a == b:
                    continue
                ta, tb = traces[a], traces[b]
                nested = ta & ~tb == 0 or tb & ~ta == 0
                want = colour[a] if nested else 1 - colour[a]
                if colour[b] < 0:
                    colour[b] = want
                    stack.append(b)
                elif colour[b] != want:
                    return None, True
    heads = [t for t, c in zip(traces, colour) if c == 0]
    tails = [t for t, c in zip(traces, colour) if c == 1]

    members = list(bits(clique))

    def rank(v: int, chain: list[int]) -> int:
        sizes = [popcount(t) for t in chain if t >> v & 1]
        return min(sizes) if sizes else len(members) + 1

    order = tuple(sorted(members, key=lambda v: (rank(v, heads), -rank(v, tails), v)))
    if _order_ok(order, traces):
        return order, True
    return None, False


EXHAUSTIVE_CLIQUE_LIMIT = 8


def clique_ordering_check(h: Graph, exhaustive_limit: int = EXHAUSTIVE_CLIQUE_LIMIT) -> OrderingFailure | None:
    """Check that every maximal clique admits an ordering in which each outside
    vertex's neighbourhood in the clique is a prefix or a suffix.

    Only maximal cliques are examined: an admissible ordering of a maximal
    clique restricts to one of every subclique, since a prefix or suffix of the
    big ordering meets a subclique in a prefix or suffix of the restriction.
    Vertices adjacent to none or all of the clique impose nothing.
    """
    for clique in maximal_cliques(h):
        if popcount(clique) <= 2:
            continue
        traces = _traces(h, clique)
        if popcount(clique) <= exhaustive_limit:
            if _exhaustive_ordering(clique, traces) is None:
                return OrderingFailure(clique, tuple(traces))
        else:
            order, conclusive = _anchored_ordering(clique, traces)
            if order is None:
                return OrderingFailure(clique, tuple(traces), conclusive)
    return None


# --- stars in squares -------------------------------------------------------


def induced_stars(h: Graph, k: int):
    """Yield ``(center, leaves)`` for each induced K_{1,k} of ``h``; leaves ascending."""
    for c in range(h.n):
        nb = list(bits(h.adj[c]))
        for leaves in combinations(nb, k):
            if all(not h.adj[a] >> b & 1 for a, b in combinations(leaves, 2)):
                yield c, leaves


@dataclass(frozen=True)
class StarCompletion:
    """Witness vertices realising D_n (``old_leaf`` None) or D_n^- around a star.

    ``midpoints[i]`` is the witness vertex joining the center to ``leaves[i]``;
    it is None exactly for the leaf reached by an old edge.
    """

    center: int
    leaves: tuple[int, ...]
    midpoints: tuple[int | None, ...]
    old_leaf: int | None = None
    vertices: tuple[int, ...] = field(default=())

    @property
    def kind(self) -> str:
        return "D" if self.old_leaf is None else "D_minus"


def k1n_containment_check(h: Graph, witness: Graph, center: int, leaves) -> StarCompletion | None:
    """Complete an induced star of ``h = witness^2`` to a D_n or D_n^- inside ``witness``.

    For each leaf joined to the center by a new edge (absent from ``witness``)
    a common witness neighbour is chosen; at most one leaf may be joined by an
    old edge.  The located vertices carry the pattern as a subgraph of
    ``witness`` and its square as a subgraph of ``h``; both are checked before
    returning.  Returns None when the construction fails.
    """
    if square(witness) != h:
        raise GraphError("h is not the square of the witness graph")
    leaves = tuple(leaves)
    n = len(leaves)
    if n < 1 or center in leaves or len(set(leaves)) != n:
        raise GraphError("star needs a center and n >= 1 distinct leaves")
    if not all(h.adj[center] >> w & 1 for w in leaves) or any(
        h.adj[a] >> b & 1 for a, b in combinations(leaves, 2)
    ):
        raise GraphError("vertices do not induce a K_{1,n} in h")
    old = [w for w in leaves if witness.adj[center] >> w & 1]
    if len(old) > 1:
        return None
    old_leaf = old[0] if old else None
    midpoints: list[int | None] = []
    taken = 0
    for w in leaves:
        if w == old_leaf:
            midpoints.append(None)
            continue
        common = witness.adj[center] & witness.adj[w] & ~taken
        for other in leaves:
            common &= ~(1 << other)
        if not common:
            return None
        m = (common & -common).bit_length() - 1
        taken |= 1 << m
        midpoints.append(m)
    # pattern vertex order matches named_graph("D"/"D_minus", n): v, u_1..u_n, w_1..
    if old_leaf is None:
        roles = [center] + midpoints + list(leaves)
        pattern = named_graph("D", n)
    else:
        rest = [i for i, w in enumerate(leaves) if w != old_leaf]
        roles = [center] + [midpoints[i] for i in rest] + [old_leaf] + [leaves[i] for i in rest]
        pattern = named_graph("D_minus", n)
    if len(set(roles)) != len(roles):
        return None
    for a, b in pattern.edges():
        if not witness.has_edge(roles[a], roles[b]):
            return None
    for a, b in square(pattern).edges():
        if not h.has_edge(roles[a], roles[b]):
            return None
    return StarCompletion(center, leaves, tuple(midpoints), old_leaf, tuple(roles))


# --- square roots -----------------------------------------------------------

MAX_ROOT_N = 8


def has_square_root(h: Graph, max_root_n: int = MAX_ROOT_N) -> Graph | None:
    """A graph ``g`` on ``h``'s vertices with ``square(g) == h``, or None.

    Every root is a spanning subgraph of ``h``, so only subsets of ``E(h)`` are
    tried, each vertex keeping at least one edge when it has one in ``h``.
    """
    if h.n > max_root_n:
        raise ValueError(f"square-root search refuses n={h.n} > {max_root_n}")
    edges = h.edges()
    m = len(edges)
    for sub in range(1 << m):
        adj = [0] * h.n
        for i in range(m):
            if sub >> i & 1:
                u, v = edges[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if any(h.adj[v] and not adj[v] for v in range(h.n)):
            continue
        g = Graph(h.n, adj)
        if square(g) == h:
            return g
    return None
