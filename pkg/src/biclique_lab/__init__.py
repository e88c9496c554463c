"""Biclique graph operators, graph squares, IIC posets, and a theorem-checking harness."""

from .bicliques import (
    Biclique,
    BicliqueFamily,
    NoBicliquesError,
    enumerate_bicliques,
    enumerate_bicliques_oracle,
    is_biclique,
    mutually_included,
)
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    common_neighborhood,
    induced_subgraph,
    is_bipartite,
    is_isomorphic,
    is_triangle_free,
    named_graph,
    neighbors,
    square,
)
from .operators import OperatorResult, kb, kbm
from .posets import Poset, is_iic, is_iic_comparability

__version__ = "0.1.0"
