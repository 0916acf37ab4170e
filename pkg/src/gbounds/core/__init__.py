"""
Core graph functionality.

This package contains the bitset graph type, exact arithmetic helpers,
interchange formats, named families and the library's exceptions.
"""

from .arith import Rational, binom, ceil_rat, floor_rat, ratio_table
from .errors import (
    GBoundsError,
    GraphFormatError,
    InvalidParameterError,
    InvariantViolationError,
    NotBipartiteError,
    NotInGammaError,
    OracleLimitError,
    RejectionCapError,
)
from .formats import encode_graph6, parse_edge_list, parse_graph6, read_graphs
from .graph import Bipartition, GammaClassProof, Graph, find_bipartition, gamma_class
from .named import make_named, parse_named, small_graph_catalog

__all__ = [
    "Rational",
    "binom",
    "ceil_rat",
    "floor_rat",
    "ratio_table",
    "GBoundsError",
    "GraphFormatError",
    "InvalidParameterError",
    "InvariantViolationError",
    "NotBipartiteError",
    "NotInGammaError",
    "OracleLimitError",
    "RejectionCapError",
    "encode_graph6",
    "parse_edge_list",
    "parse_graph6",
    "read_graphs",
    "Bipartition",
    "GammaClassProof",
    "Graph",
    "find_bipartition",
    "gamma_class",
    "make_named",
    "parse_named",
    "small_graph_catalog",
]
