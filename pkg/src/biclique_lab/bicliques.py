"""Bicliques: maximal induced complete bipartite subgraphs with both sides nonempty."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet, bits, common_neighborhood_mask, find_triangle


class NoBicliquesError(ValueError):
    """Raised for edgeless graphs, which have no bicliques."""


@dataclass(frozen=True, slots=True)
class Biclique:
    """Sides ``x`` and ``y`` as bitmasks over the host's vertices.

    Canonical instances have the smallest vertex of ``x | y`` in ``x``.
    """

    x: int
    y: int

    @classmethod
    def canonical(cls, x: int, y: int) -> "Biclique":
        both = x | y
        low = both & -both
        return cls(x, y) if x & low else cls(y, x)

    @property
    def vertices(self) -> int:
        return self.x | self.y

    def swapped(self) -> "Biclique":
        return Biclique(self.y, self.x)

    def sort_key(self) -> tuple:
        members = list(bits(self.vertices))
        return (members[0], members, list(bits(self.x)))

    def x_set(self, n: int) -> VertexSet:
        return VertexSet(self.x, n)

    def y_set(self, n: int) -> VertexSet:
        return VertexSet(self.y, n)

    def label(self) -> str:
        return " ".join(map(str, bits(self.x))) + " | " + " ".join(map(str, bits(self.y)))

    def __repr__(self) -> str:
        return f"Biclique({self.label()})"


@dataclass(frozen=True)
class BicliqueFamily:
    host: Graph
    items: tuple[Biclique, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i: int) -> Biclique:
        return self.items[i]

    def index(self, b: Biclique) -> int:
        return self.items.index(Biclique.canonical(b.x, b.y))


def _family(g: Graph, found) -> BicliqueFamily:
    items = sorted({Biclique.canonical(x, y) for x, y in found}, key=Biclique.sort_key)
    return BicliqueFamily(g, tuple(items))


def enumerate_bicliques(g: Graph) -> BicliqueFamily:
    """All bicliques of ``g`` in canonical order.

    Labelled bicliques ``(X, Y)`` are exactly the maximal cliques, with both sides
    nonempty, of the auxiliary graph on ``V x {X, Y}`` where same-side copies are
    adjacent iff non-adjacent in ``g`` and cross copies iff adjacent in ``g``.
    Those cliques are listed with Bron-Kerbosch (pivoting), rooted at the
    smallest vertex of the biclique placed on side X, so each biclique is
    produced once.
    """
    if not any(g.adj):
        raise NoBicliquesError("graph has no edges, hence no bicliques")
    n = g.n
    full = g.full_mask
    # aux vertex v (side X) is bit v, v (side Y) is bit n + v
    non_adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    aux = [non_adj[v] | g.adj[v] << n for v in range(n)]
    aux += [g.adj[v] | non_adj[v] << n for v in range(n)]
    y_half = full << n
    found: list[tuple[int, int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x and r & y_half:
                found.append((r & full, r >> n))
            return
        # no Y-side vertex can ever join: every completion has an empty side
        if not (r | p) & y_half:
            return
        pu = p | x
        pivot, best = -1, -1
        while pu:
            low = pu & -pu
            u = low.bit_length() - 1
            c = bin(p & aux[u]).count("1")
            if c > best:
                pivot, best = u, c
            pu ^= low
        cand = p & ~aux[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & aux[v], x & aux[v])
            p &= ~low
            x |= low
            cand ^= low

    for v in range(n):
        if not g.adj[v]:
            continue
        later = full & ~((2 << v) - 1)
        earlier = (1 << v) - 1
        allowed = later | later << n
        banned = earlier | earlier << n
        expand(1 << v, aux[v] & allowed, aux[v] & banned)
    return _family(g, found)


def enumerate_bicliques_oracle(g: Graph, max_n: int = 16) -> BicliqueFamily:
    """Brute-force reference enumerator; exponential, for testing only.

    Lists every pair of disjoint independent sets with all cross edges present
    and keeps those that no single vertex can extend.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"oracle refuses n={n} > {max_n}")
    adj = g.adj
    indep = []
    for s in range(1, 1 << n):
        if all(not (s >> a & 1 and s >> b & 1 and adj[a] >> b & 1) for a in range(n) for b in range(a + 1, n)):
            indep.append(s)
    pairs = set()
    for xs in indep:
        cross = (1 << n) - 1
        for a in range(n):
            if xs >> a & 1:
                cross &= adj[a]
        for ys in indep:
            # store each unordered pair once, side holding the smallest vertex first
            if ys & ~cross == 0 and (xs & -xs) < (ys & -ys):
                pairs.add((xs, ys))

    def stored(a: int, b: int) -> bool:
        return (a, b) in pairs or (b, a) in pairs

    maximal = []
    for xs, ys in pairs:
        outside = ((1 << n) - 1) & ~(xs | ys)
        if not any(stored(xs | 1 << v, ys) or stored(xs, ys | 1 << v) for v in range(n) if outside >> v & 1):
            maximal.append((xs, ys))
    if not pairs:
        raise NoBicliquesError("graph has no edges, hence no bicliques")
    return _family(g, maximal)


def _mask(g: Graph, s) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        m |= 1 << v
    return m


def _independent(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def is_biclique(g: Graph, x, y) -> bool:
    """True iff ``(x, y)`` is a biclique of ``g``.

    In triangle-free graphs this is ``N*(x) == y and N*(y) == x`` for independent
    ``x`` and ``y``; otherwise maximality is checked vertex by vertex.
    """
    xm, ym = _mask(g, x), _mask(g, y)
    if xm & ym:
        raise GraphError("biclique sides must be disjoint")
    if not xm or not ym or not _independent(g, xm) or not _independent(g, ym):
        return False
    nx_, ny_ = common_neighborhood_mask(g, xm), common_neighborhood_mask(g, ym)
    if ym & ~nx_:
        return False
    if find_triangle(g) is None:
        return nx_ == ym and ny_ == xm
    outside = g.full_mask & ~(xm | ym)
    for v in bits(outside):
        row = g.adj[v]
        if (row & ym) == ym and not row & xm:
            return False
        if (row & xm) == xm and not row & ym:
            return False
    return True


def _proper_subset(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def mutually_included(p: Biclique, q: Biclique) -> bool:
    """Whether some labelling of ``q`` keeps cross sides disjoint and nests the sides
    properly in opposite directions."""
    if p.vertices == q.vertices and {p.x, p.y} == {q.x, q.y}:
        raise ValueError("a biclique is not compared with itself")
    for qx, qy in ((q.x, q.y), (q.y, q.x)):
        if p.x & qy or qx & p.y:
            continue
        if _proper_subset(qx, p.x) and _proper_subset(p.y, qy):
            return True
        if _proper_subset(p.x, qx) and _proper_subset(qy, p.y):
            return True
    return False
