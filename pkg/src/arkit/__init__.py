"""Toolkit for anti-Ramsey numbers of matchings: exact matching and rainbow
solvers, extremal constructions, structure detectors, and stress harnesses."""

from .colored_graph import (ColoredGraph, Graph, Matching, color_census, induced,
                            parse_colored_graph, parse_graph, serialize, serialize_graph)
from .errors import BudgetExceeded, FormatError, InstanceTooLarge, RegimeError
from .extremal import (anti_ramsey_matching, construct_extremal_coloring, construct_turan_graph,
                       rainbow_plus_one, threshold_g, turan_matching)
from .matching import berge_witness, gallai_edmonds, hall_matching, max_matching, staircase_check
from .rainbow import has_rainbow_matching, max_rainbow_matching, representative_subgraph
from .structures import find_mono_clique, find_mono_join, theorem_verdict

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "ColoredGraph", "FormatError", "Graph", "InstanceTooLarge", "Matching",
    "RegimeError", "anti_ramsey_matching", "berge_witness", "color_census",
    "construct_extremal_coloring", "construct_turan_graph", "find_mono_clique", "find_mono_join",
    "gallai_edmonds", "hall_matching", "has_rainbow_matching", "induced", "max_matching",
    "max_rainbow_matching", "parse_colored_graph", "parse_graph", "rainbow_plus_one",
    "representative_subgraph", "serialize", "serialize_graph", "staircase_check",
    "theorem_verdict", "threshold_g", "turan_matching",
]
