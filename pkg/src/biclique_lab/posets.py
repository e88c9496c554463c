"""Finite posets, interval intersection closure (IIC), and comparability graphs.

A :class:`Poset` on ``0..m-1`` keeps two bitmask rows per element:
``up[x]`` (the successors interval, ``{y : x <= y}``) and ``down[x]`` (the
predecessors interval).  Both contain ``x`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bicliques import Biclique, BicliqueFamily, _family
from .graph import Graph, GraphError, bits, find_bijection, is_bipartite


class PosetError(ValueError):
    pass


class Poset:
    __slots__ = ("m", "up", "down")

    def __init__(self, m: int, up: Iterable[int]):
        up = tuple(up)
        if m < 1 or len(up) != m:
            raise PosetError(f"expected {m} >= 1 rows, got {len(up)}")
        full = (1 << m) - 1
        for x in range(m):
            if up[x] & ~full:
                raise PosetError(f"element {x} related to something outside 0..{m - 1}")
            if not up[x] >> x & 1:
                raise PosetError(f"not reflexive at {x}")
        for x in range(m):
            for y in bits(up[x]):
                if y != x and up[y] >> x & 1:
                    raise PosetError(f"antisymmetry fails: {x} <= {y} <= {x}")
                for z in bits(up[y]):
                    if not up[x] >> z & 1:
                        raise PosetError(f"transitivity fails: {x} <= {y} <= {z}")
        self.m = m
        self.up = up
        self.down = tuple(sum(1 << x for x in range(m) if up[x] >> y & 1) for y in range(m))

    @classmethod
    def from_matrix(cls, leq) -> "Poset":
        m = len(leq)
        return cls(m, (sum(1 << j for j in range(m) if leq[i][j]) for i in range(m)))

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Reflexive-transitive closure of the given ``u <= v`` pairs."""
        up = [1 << x for x in range(m)]
        for u, v in pairs:
            if not (0 <= u < m and 0 <= v < m):
                raise PosetError(f"pair ({u}, {v}) out of range for m={m}")
            up[u] |= 1 << v
        changed = True
        while changed:
            changed = False
            for x in range(m):
                row = up[x]
                for y in bits(row):
                    row |= up[y]
                if row != up[x]:
                    up[x] = row
                    changed = True
        return cls(m, up)

    @classmethod
    def chain(cls, m: int) -> "Poset":
        return cls(m, (((1 << m) - 1) & ~((1 << x) - 1) for x in range(m)))

    @classmethod
    def antichain(cls, m: int) -> "Poset":
        return cls(m, (1 << x for x in range(m)))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        """Strict comparable pairs ``(u, v)`` with ``u < v`` in the order, sorted."""
        return [(x, y) for x in range(self.m) for y in bits(self.up[x]) if y != x]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self.m == other.m and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.m, self.up))

    def __repr__(self) -> str:
        return f"Poset(m={self.m}, pairs={self.pairs()})"


def _check(p: Poset, x: int) -> None:
    if not (isinstance(x, int) and 0 <= x < p.m):
        raise PosetError(f"element {x!r} out of range 0..{p.m - 1}")


def pred_interval(p: Poset, x: int) -> set[int]:
    _check(p, x)
    return set(bits(p.down[x]))


def succ_interval(p: Poset, x: int) -> set[int]:
    _check(p, x)
    return set(bits(p.up[x]))


PREDECESSOR = "predecessor-side"
SUCCESSOR = "successor-side"


@dataclass(frozen=True)
class IICWitness:
    """``pair`` has a nonempty interval intersection that is nobody's interval."""

    kind: str
    pair: tuple[int, int]
    intersection: frozenset[int]


def is_iic(p: Poset) -> IICWitness | None:
    """None when both interval families are closed under nonempty intersection.

    Pairs are scanned in lexicographic order, predecessor side before successor side.
    """
    down_known, up_known = set(p.down), set(p.up)
    for u in range(p.m):
        for v in range(u + 1, p.m):
            for kind, rows, known in ((PREDECESSOR, p.down, down_known), (SUCCESSOR, p.up, up_known)):
                inter = rows[u] & rows[v]
                if inter and inter not in known:
                    return IICWitness(kind, (u, v), frozenset(bits(inter)))
    return None


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.m, ((p.up[x] | p.down[x]) & ~(1 << x) for x in range(p.m)))


def biclique_poset(g: Graph, family: BicliqueFamily) -> Poset:
    """Order the bicliques of bipartite ``g`` by proper inclusion of their A-parts.

    Side A is the one :func:`is_bipartite` reports.
    """
    parts = is_bipartite(g)
    if parts is None:
        raise GraphError("biclique poset needs a bipartite graph")
    a = parts[0].bits
    apart = [b.vertices & a for b in family.items]
    k = len(apart)
    up = []
    for i in range(k):
        row = 1 << i
        for j in range(k):
            if j != i and apart[i] != apart[j] and apart[i] & ~apart[j] == 0:
                row |= 1 << j
        up.append(row)
    return Poset(k, up)


def pred_succ_graph(p: Poset) -> tuple[Graph, list[str]]:
    """Bipartite graph on ``a_0..a_{m-1}`` (vertices ``0..m-1``) and ``b_0..b_{m-1}``
    (vertices ``m..2m-1``) with ``a_u ~ b_v`` iff ``u <= v``."""
    m = p.m
    edges = [(u, m + v) for u in range(m) for v in bits(p.up[u])]
    labels = [f"a{u}" for u in range(m)] + [f"b{v}" for v in range(m)]
    return Graph.from_edges(2 * m, edges), labels


def canonical_biclique(p: Poset, v: int) -> Biclique:
    """``X_v Y_v``: ``a_u`` for ``u <= v`` against ``b_w`` for ``v <= w``."""
    _check(p, v)
    return Biclique.canonical(p.down[v], p.up[v] << p.m)


def canonical_bicliques_of_GP(p: Poset) -> BicliqueFamily:
    g, _ = pred_succ_graph(p)
    items = [canonical_biclique(p, v) for v in range(p.m)]
    # distinct elements have distinct intervals by antisymmetry
    assert len(set(items)) == p.m
    return _family(g, [(b.x, b.y) for b in items])


# --- transitive orientations -------------------------------------------------

MAX_RECOGNITION_N = 10


def transitive_orientations(h: Graph):
    """Yield every transitive orientation of ``h`` as a tuple of out-neighbour masks.

    Backtracks on the first unoriented edge; each choice is closed under the
    forcing rules (``u->v`` with ``vw`` an edge and ``uw`` not forces ``w->v``;
    ``u->v`` with ``uw`` an edge and ``vw`` not forces ``u->w``; ``u->v->w``
    forces ``u->w``) and dropped on contradiction.
    """
    n = h.n
    adj = h.adj
    edges = h.edges()

    def close(out: list[int], queue: list[tuple[int, int]]) -> bool:
        while queue:
            u, v = queue.pop()
            if out[v] >> u & 1:
                return False
            if out[u] >> v & 1:
                continue
            out[u] |= 1 << v
            for w in bits(adj[v] & ~adj[u] & ~(1 << u)):
                queue.append((w, v))
            for w in bits(adj[u] & ~adj[v] & ~(1 << v)):
                queue.append((u, w))
            for w in bits(out[v]):
                if not adj[u] >> w & 1:
                    return False
                queue.append((u, w))
            for w in range(n):
                if out[w] >> u & 1:
                    if not adj[w] >> v & 1:
                        return False
                    queue.append((w, v))
        return True

    def rec(out: list[int]):
        for u, v in edges:
            if not (out[u] >> v & 1 or out[v] >> u & 1):
                break
        else:
            yield tuple(out)
            return
        for a, b in ((u, v), (v, u)):
            trial = list(out)
            if close(trial, [(a, b)]):
                yield from rec(trial)

    yield from rec([0] * n)


def orientation_poset(out: tuple[int, ...]) -> Poset:
    return Poset(len(out), (row | 1 << x for x, row in enumerate(out)))


def is_iic_comparability(h: Graph, max_n: int = MAX_RECOGNITION_N) -> Poset | None:
    """First transitive orientation of ``h`` whose poset is IIC, or None.

    None means every transitive orientation was tried (or there is none, when
    ``h`` is not a comparability graph).
    """
    if h.n > max_n:
        raise ValueError(f"recognition refuses n={h.n} > {max_n}")
    for out in transitive_orientations(h):
        poset = orientation_poset(out)
        if is_iic(poset) is None:
            return poset
    return None


def poset_isomorphism(p: Poset, q: Poset) -> list[int] | None:
    """Order-preserving bijection ``phi`` with ``x <= y`` iff ``phi[x] <= phi[y]``."""
    if p.m != q.m:
        return None
    return find_bijection(p.up, p.down, q.up, q.down)
