"""
Chip-firing and q-reduced divisors
==================================

Every divisor class has exactly one q-reduced representative. Dhar's
burning algorithm certifies it.
"""

from critgrp import complete_graph
from critgrp.sandpile import dhar_burn, q_reduce, reduced_divisors

G = complete_graph(4)
d = (5, -3, 0, -2)
red = q_reduce(G, d, 0)
print("divisor    ", d)
print("0-reduced  ", red)
print("burn rounds", dhar_burn(G, red, 0).rounds)

# one reduced divisor per spanning tree
print("degree-0 reduced divisors:", len(list(reduced_divisors(G, 0))))
