"""
Exponent versus maximum degree
==============================

For biconnected graphs the exponent is at least the maximum degree. With
a cut vertex the bound can fail: the path on three vertices is a tree
(trivial Jacobian) with a vertex of degree 2.
"""

from critgrp import banana_graph, path_graph
from critgrp.classify import SearchBounds, lower_bound_sweep
from critgrp.sandpile import WitnessError, exponent_lower_bound_witness

print(exponent_lower_bound_witness(banana_graph(3)))
try:
    exponent_lower_bound_witness(path_graph(3))
except WitnessError as exc:
    print("P_3:", exc)

rep = lower_bound_sweep(SearchBounds(5, 7))
print(rep.checks)
print(len(rep.details["violations"]), "violations, all with a cut vertex")
