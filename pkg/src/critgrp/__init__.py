"""Jacobians (critical groups) of multigraphs and regular matroids, in exact arithmetic."""

from .graph import Multigraph, Orientation, banana_graph, complete_graph, cycle_graph, path_graph, wedge_sum
from .groups import AbelianGroup
from .lattice import jacobian_dual_cut, jacobian_edge_lattice, jacobian_laplacian
from .matroid import RegularMatroidRep, matroid_jacobian
from .sandpile import dhar_burn, jacobian_by_reduced_divisors, q_reduce

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Multigraph",
    "Orientation",
    "RegularMatroidRep",
    "banana_graph",
    "complete_graph",
    "cycle_graph",
    "dhar_burn",
    "jacobian_by_reduced_divisors",
    "jacobian_dual_cut",
    "jacobian_edge_lattice",
    "jacobian_laplacian",
    "matroid_jacobian",
    "path_graph",
    "q_reduce",
    "wedge_sum",
]
