"""Exact linear and centered chromatic numbers of small graphs, with
verifiers, constructive colorings, obstruction search and claim scans."""

from .graph import Graph, from_graph6, to_graph6
from .solvers import centered_chromatic, decide_linear_at_most, linear_chromatic, treedepth
from .verify import Coloring, EliminationForest, is_centered, is_linear

__all__ = [
    "Coloring",
    "EliminationForest",
    "Graph",
    "centered_chromatic",
    "decide_linear_at_most",
    "from_graph6",
    "is_centered",
    "is_linear",
    "linear_chromatic",
    "to_graph6",
    "treedepth",
]
__version__ = "0.1.0"
