"""Simple undirected graphs on dense integer vertices, stored as bitmask rows.

Vertex sets are Python ints used as bitsets (bit ``v`` set means ``v`` is a
member).  :class:`VertexSet` wraps such a mask together with its host size for
the public API; hot loops elsewhere work on the raw ``int`` masks directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph input (bad vertex, self-loop, malformed construction)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of ``0..n-1``."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} exceeds host size {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices), n)

    def __iter__(self) -> Iterator[int]:
        return bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _other(self, other: "VertexSet") -> int:
        if other.n != self.n:
            raise GraphError("vertex sets over different hosts")
        return other.bits

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & self._other(other), self.n)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | self._other(other), self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~self._other(other), self.n)

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~self._other(other) == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def to_list(self) -> list[int]:
        return list(bits(self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood bitmask of ``v``.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet(self.full_mask, self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, (full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def is_connected(self) -> bool:
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise GraphError(f"vertex {v!r} out of range 0..{g.n - 1}")


def _as_mask(g: Graph, s) -> int:
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise GraphError("vertex set belongs to a different host size")
        return s.bits
    if isinstance(s, int):
        if s < 0 or s >> g.n:
            raise GraphError(f"mask {s:#x} out of range for n={g.n}")
        return s
    m = 0
    for v in s:
        _check_vertex(g, v)
        m |= 1 << v
    return m


def neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v], g.n)


def common_neighborhood_mask(g: Graph, s: int) -> int:
    out = g.full_mask
    while s:
        low = s & -s
        out &= g.adj[low.bit_length() - 1]
        s ^= low
    return out


def common_neighborhood(g: Graph, s) -> VertexSet:
    """Vertices adjacent to every vertex of ``s``; the empty set maps to V(g)."""
    return VertexSet(common_neighborhood_mask(g, _as_mask(g, s)), g.n)


def induced_subgraph(g: Graph, s) -> tuple[Graph, list[int]]:
    """Return ``(h, labels)`` where ``h`` is ``g[s]`` and ``labels[i]`` is the
    original vertex that became vertex ``i`` of ``h``."""
    mask = _as_mask(g, s)
    if not mask:
        raise GraphError("induced subgraph of an empty vertex set")
    labels = list(bits(mask))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        adj.append(mask_of(index[u] for u in bits(g.adj[v] & mask)))
    return Graph(len(labels), adj), labels


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle ``(a, b, c)`` with ``a < b < c``, or None."""
    for a in range(g.n):
        higher = g.adj[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            common = g.adj[b] & higher >> (b + 1) << (b + 1)
            if common:
                return a, b, (common & -common).bit_length() - 1
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def is_bipartite(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """2-colour ``g`` or return None when it has an odd cycle.

    Components are handled in order of their smallest vertex, and side A of each
    component is the one holding that vertex.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    a = mask_of(v for v in range(g.n) if side[v] == 0)
    return VertexSet(a, g.n), VertexSet(g.full_mask & ~a, g.n)


def square(g: Graph) -> Graph:
    """Same vertices; ``uv`` adjacent iff ``1 <= dist(u, v) <= 2``."""
    adj = []
    for v in range(g.n):
        row = g.adj[v]
        for u in bits(g.adj[v]):
            row |= g.adj[u]
        adj.append(row & ~(1 << v))
    return Graph(g.n, adj)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier, seen, d = 1 << source, 1 << source, 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = d
    return dist


# --- isomorphism -------------------------------------------------------------


def _refine(rows_out: list[tuple[int, ...]], rows_in: list[tuple[int, ...]]) -> list[list[int]]:
    """Joint colour refinement over several (di)graphs given as bitmask rows.

    Colour names are shared across the inputs so colours are comparable.
    Returns one colour list per input graph.
    """
    colours = [[0] * len(r) for r in rows_out]
    n_classes = 1
    while True:
        sigs = []
        for out, inn, col in zip(rows_out, rows_in, colours):
            gsig = []
            for v in range(len(out)):
                gsig.append(
                    (
                        col[v],
                        tuple(sorted(col[u] for u in bits(out[v]))),
                        tuple(sorted(col[u] for u in bits(inn[v]))),
                    )
                )
            sigs.append(gsig)
        palette = {s: i for i, s in enumerate(sorted({s for gsig in sigs for s in gsig}))}
        colours = [[palette[s] for s in gsig] for gsig in sigs]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def find_bijection(
    out_g: tuple[int, ...],
    in_g: tuple[int, ...],
    out_h: tuple[int, ...],
    in_h: tuple[int, ...],
) -> list[int] | None:
    """Backtracking search for ``phi`` with ``u->v`` in g iff ``phi(u)->phi(v)`` in h.

    Shared by graph isomorphism (out == in) and poset isomorphism.
    """
    n = len(out_g)
    if n != len(out_h):
        return None
    col_g, col_h = _refine([list(out_g), list(out_h)], [list(in_g), list(in_h)])
    if sorted(col_g) != sorted(col_h):
        return None
    # map rarest colour classes first, then vertices adjacent to mapped ones
    freq: dict[int, int] = {}
    for c in col_g:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = (-(popcount((out_g[v] | in_g[v]) & placed)), freq[col_g[v]], v)
            if best is None or key < best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or col_h[w] != col_g[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                pu = phi[u]
                if (out_g[v] >> u & 1) != (out_h[w] >> pu & 1) or (in_g[v] >> u & 1) != (
                    in_h[w] >> pu & 1
                ):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return phi if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """Return ``phi`` (``phi[v]`` is the image of ``v``) mapping g onto h, or None."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    return find_bijection(g.adj, g.adj, h.adj, h.adj)


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before pairwise isomorphism tests."""
    (col,) = _refine([list(g.adj)], [list(g.adj)])
    sig = sorted((g.degree(v), tuple(sorted(g.degree(u) for u in bits(g.adj[v])))) for v in range(g.n))
    tri = sorted(
        sum(1 for u in bits(g.adj[v]) for w in bits(g.adj[v] & g.adj[u]) if u < w) for v in range(g.n)
    )
    return (g.n, g.edge_count(), tuple(sig), tuple(tri), tuple(sorted(col)))


# --- named graphs ------------------------------------------------------------


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def named_graph(name: str, parameter: int | None = None) -> Graph:
    """Standard small graphs.

    ``net`` uses triangle ``0,1,2`` with pendants ``3,4,5`` (``i ~ i+3``);
    ``net_star`` adds pendant edges ``3-4`` (bit 0), ``4-5`` (bit 1), ``3-5`` (bit 2).
    ``D(n)`` orders vertices ``v, u_1..u_n, w_1..w_n``; ``D_minus(n)`` drops ``w_n``.
    """

    def need(lo: int) -> int:
        if parameter is None or not isinstance(parameter, int) or parameter < lo:
            raise GraphError(f"{name} needs an integer parameter >= {lo}")
        return parameter

    def none() -> None:
        if parameter is not None:
            raise GraphError(f"{name} takes no parameter")

    if name == "path":
        n = need(1)
        return Graph.from_edges(n, _path_edges(list(range(n))))
    if name == "cycle":
        n = need(3)
        return Graph.from_edges(n, _path_edges(list(range(n))) + [(n - 1, 0)])
    if name in ("star", "K1n"):
        n = need(1)
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    if name == "complete":
        n = need(1)
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if name in ("net", "net_star"):
        mask = 0
        if name == "net_star":
            if parameter is None or not 0 <= parameter < 8:
                raise GraphError("net_star needs a 3-bit mask 0..7")
            mask = parameter
        else:
            none()
        edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
        for bit, e in enumerate([(3, 4), (4, 5), (3, 5)]):
            if mask >> bit & 1:
                edges.append(e)
        return Graph.from_edges(6, edges)
    if name in ("domino", "co_domino"):
        none()
        dom = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
        return dom if name == "domino" else dom.complement()
    if name == "wheel4":
        none()
        return Graph.from_edges(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4), (4, 1)])
    if name == "diamond":
        none()
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    if name == "fan3":
        none()
        return Graph.from_edges(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4)])
    if name in ("D", "D_minus"):
        n = need(1)
        edges = [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)]
        if name == "D":
            return Graph.from_edges(2 * n + 1, edges)
        return Graph.from_edges(2 * n, edges[:-1])
    raise GraphError(f"unknown graph name {name!r}")


NAMED_GRAPHS = (
    "path", "cycle", "star", "complete", "net", "net_star", "domino", "co_domino",
    "wheel4", "diamond", "fan3", "D", "D_minus", "K1n",
)
