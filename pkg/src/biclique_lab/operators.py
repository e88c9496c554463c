"""The biclique graph KB(G) and the mutually-included biclique graph KB_m(G)."""

from __future__ import annotations

from dataclasses import dataclass

from .bicliques import BicliqueFamily, enumerate_bicliques, mutually_included
from .graph import Graph


@dataclass(frozen=True)
class OperatorResult:
    """Vertex ``i`` of ``graph`` stands for ``family.items[i]``."""

    family: BicliqueFamily
    graph: Graph


def kb_from_family(family: BicliqueFamily) -> OperatorResult:
    items = family.items
    adj = [0] * len(items)
    for i, p in enumerate(items):
        pv = p.vertices
        for j in range(i + 1, len(items)):
            if pv & items[j].vertices:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return OperatorResult(family, Graph(len(items), adj))


def kbm_from_family(family: BicliqueFamily) -> OperatorResult:
    items = family.items
    adj = [0] * len(items)
    for i, p in enumerate(items):
        for j in range(i + 1, len(items)):
            if mutually_included(p, items[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return OperatorResult(family, Graph(len(items), adj))


def kb(g: Graph, family: BicliqueFamily | None = None) -> OperatorResult:
    """Intersection graph of the bicliques of ``g``."""
    return kb_from_family(family if family is not None else enumerate_bicliques(g))


def kbm(g: Graph, family: BicliqueFamily | None = None) -> OperatorResult:
    """Bicliques of ``g`` joined when mutually included; a spanning subgraph of ``kb(g)``."""
    return kbm_from_family(family if family is not None else enumerate_bicliques(g))


def kb_and_kbm(g: Graph) -> tuple[OperatorResult, OperatorResult]:
    family = enumerate_bicliques(g)
    return kb_from_family(family), kbm_from_family(family)
