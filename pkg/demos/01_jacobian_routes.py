"""
Four ways to compute a Jacobian
===============================

The Jacobian of a graph can be read off the reduced Laplacian, the edge
lattice, the dual of the cut lattice, or the reduced divisors. All four
agree.
"""

from critgrp import complete_graph, cycle_graph, banana_graph
from critgrp.lattice import jacobian_all_routes

for name, G in [("C_5", cycle_graph(5)), ("B_3", banana_graph(3)), ("K_4", complete_graph(4))]:
    routes = jacobian_all_routes(G)
    print(name)
    for route, group in routes.items():
        print(f"  {route:>16}: {group}")
