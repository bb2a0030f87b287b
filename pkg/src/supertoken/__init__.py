"""Supertoken graphs F_k^s(G) and F^s_{k x 1}(G).

Build the graph of all placements of ``k`` tokens (equal or distinct) on a base
graph with at most ``s`` tokens per vertex, count its vertices and edges in
closed form, and check structural results against explicit construction.
"""
from .builder import SupertokenGraph, TooLargeError, build, edges_over_base_edge, neighbors
from .configs import (Configuration, config_rank, config_unrank, enumerate_configs,
                      is_valid_config, multiset_symmetric_difference)
from .counting import (count_report, f_count, f_count_recurrence, h_count, order_of,
                       per_edge_multiplier, per_edge_multiplier_dist,
                       per_edge_multiplier_indist)
from .graph import (BaseGraph, from_edge_list, make_complete, make_cycle, make_path,
                    make_star)
from .kernels import HAVE_COMPILED
from .tokens import TokenMode, TokenSpec

__version__ = "0.1.0"

__all__ = [
    "BaseGraph", "Configuration", "HAVE_COMPILED", "SupertokenGraph", "TokenMode",
    "TokenSpec", "TooLargeError", "build", "config_rank", "config_unrank", "count_report",
    "edges_over_base_edge", "enumerate_configs", "f_count", "f_count_recurrence",
    "from_edge_list", "h_count", "is_valid_config", "make_complete", "make_cycle",
    "make_path", "make_star", "multiset_symmetric_difference", "neighbors", "order_of",
    "per_edge_multiplier", "per_edge_multiplier_dist", "per_edge_multiplier_indist",
]
