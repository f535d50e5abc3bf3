"""Exact workbench for vertex/edge Ramsey arrowing and generalized Folkman numbers."""

from .arrowing import ArrowingInstance, Coloring, Indeterminate, Mode, Outcome, Verdict, arrows, arrows_bruteforce
from .graph import Graph, emit_graph6, make_graph, parse_graph6

__all__ = [
    "ArrowingInstance",
    "Coloring",
    "Graph",
    "Indeterminate",
    "Mode",
    "Outcome",
    "Verdict",
    "arrows",
    "arrows_bruteforce",
    "emit_graph6",
    "make_graph",
    "parse_graph6",
]
