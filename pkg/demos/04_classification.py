"""
Small exponents, exhaustively
=============================

Search every biconnected multigraph up to 6 vertices and 8 edges for small
exponents, then every small regular matroid for exponent at most 2.
"""

from critgrp.classify import SearchBounds, classify_biconnected_graphs, classify_regular_matroids_exp2

for k in (1, 2, 3):
    r = classify_biconnected_graphs(k, SearchBounds(6, 8))
    print(f"k = {k}: {r.verdict}, {len(r.found)} graphs")
    for text, factors in r.found:
        print("   ", text.replace("\n", " | ").strip(" |"), "->", factors)

r = classify_regular_matroids_exp2(SearchBounds(max_rank=3, max_elements=5))
print("matroids, k = 2:", r.verdict, r.details["max_elements_found"], "elements at most")
