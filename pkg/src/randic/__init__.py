"""Exact Randić index computations and instance verification of the lower
bound R(G) - D(G)/2 >= sqrt(2) - 1 for connected graphs."""

from .errors import (
    DomainError,
    GraphError,
    GraphFormatError,
    NotAnEdgeError,
    UnsupportedSizeError,
    VertexRangeError,
)
from .graph import Graph, diameter, parse_edge_list, parse_graph6, to_graph6
from .invariants import f_value, invariant_bundle, randic_index
from .radical import RadicalSum, decimal, sign
from .reduction import reduce_to_core
from .sources import GraphSource
from .structure import block_decomposition, essential_vertices
from .verify import VerifyReport, verify_conjecture, verify_constants, verify_lemmas

__all__ = [
    "DomainError",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "GraphSource",
    "NotAnEdgeError",
    "RadicalSum",
    "UnsupportedSizeError",
    "VerifyReport",
    "VertexRangeError",
    "block_decomposition",
    "decimal",
    "diameter",
    "essential_vertices",
    "f_value",
    "invariant_bundle",
    "parse_edge_list",
    "parse_graph6",
    "randic_index",
    "reduce_to_core",
    "sign",
    "to_graph6",
    "verify_conjecture",
    "verify_constants",
    "verify_lemmas",
]
