"""
The cut-space projection
========================

P projects the edge space onto the cut space. Its denominators
follow the exponent of the Jacobian.
"""

from critgrp import banana_graph, cycle_graph
from critgrp.graph import incidence_matrix
from critgrp.lattice import projection_and_dual
from critgrp.matroid import RegularMatroidRep, exponent2_structure_check, exponent3_entry_diagnostics

for name, G in [("C_2", cycle_graph(2)), ("B_3", banana_graph(3))]:
    P = projection_and_dual(incidence_matrix(G)).projection
    print(name)
    for row in P:
        print("  ", " ".join(f"{str(x):>5}" for x in row))
    M = RegularMatroidRep(incidence_matrix(G))
    for rep in (exponent2_structure_check(M), exponent3_entry_diagnostics(M)):
        if rep.applicable:
            print("  ", rep.name, rep.checks)
