import itertools
import math
from collections import Counter

from conftest import labelled_connected_multigraphs
from critgrp.classify import (
    SearchBounds,
    classify_biconnected_graphs,
    classify_regular_matroids_exp2,
    enumerate_connected_multigraphs,
    is_doubled_tree,
    lower_bound_sweep,
    verify_doubled_tree_characterization,
)
from critgrp.graph import (
    Multigraph,
    banana_graph,
    canonical_form,
    complete_graph,
    cycle_graph,
    path_graph,
    wedge_sum,
)
from critgrp.lattice import jacobian_laplacian


def keys(graphs):
    return sorted(canonical_form(G) for G in graphs)


def test_enumeration_small_bounds():
    assert keys(enumerate_connected_multigraphs(SearchBounds(2, 2))) == keys(
        [Multigraph(1), path_graph(2), cycle_graph(2)]
    )
    assert len(list(enumerate_connected_multigraphs(SearchBounds(1, 0)))) == 1


def test_enumeration_three_three():
    # K_1; edge, C_2, B_3; P_3, C_3, P_3 with one edge doubled
    expected = [
        Multigraph(1), path_graph(2), cycle_graph(2), banana_graph(3),
        path_graph(3), cycle_graph(3), Multigraph(3, ((0, 1), (0, 1), (1, 2))),
    ]
    assert keys(enumerate_connected_multigraphs(SearchBounds(3, 3))) == keys(expected)


def _automorphisms(G):
    A = G.multiplicity_matrix()
    return sum(
        1
        for p in itertools.permutations(range(G.n))
        if all(A[p[i]][p[j]] == A[i][j] for i in range(G.n) for j in range(G.n))
    )


def test_enumeration_against_labelled_orbits():
    found = Counter((G.n, G.m) for G in enumerate_connected_multigraphs(SearchBounds(4, 5)))
    reps = {(G.n, G.m): [] for G in enumerate_connected_multigraphs(SearchBounds(4, 5))}
    for G in enumerate_connected_multigraphs(SearchBounds(4, 5)):
        reps[(G.n, G.m)].append(G)
    for n in range(2, 5):
        for m in range(n - 1, 6):
            labelled = list(labelled_connected_multigraphs(n, m))
            classes = {canonical_form(G, refine=False) for G in labelled}
            assert found[(n, m)] == len(classes)
            # orbit-stabilizer: labelled count = sum over classes of n!/|Aut|
            assert sum(math.factorial(n) // _automorphisms(G) for G in reps[(n, m)]) == len(labelled)


def test_enumeration_unique():
    gs = list(enumerate_connected_multigraphs(SearchBounds(5, 7)))
    assert len({canonical_form(G) for G in gs}) == len(gs)


def test_classify_k1():
    r = classify_biconnected_graphs(1, SearchBounds(4, 5))
    assert r.matched and len(r.found) == 2


def test_classify_k2_k3():
    r2 = classify_biconnected_graphs(2, SearchBounds(6, 8))
    assert r2.matched and len(r2.found) == 3
    r3 = classify_biconnected_graphs(3, SearchBounds(6, 8))
    assert r3.matched and len(r3.found) == 5


def test_classify_parallel_matches_serial():
    a = classify_biconnected_graphs(3, SearchBounds(4, 6), threads=2)
    b = classify_biconnected_graphs(3, SearchBounds(4, 6))
    assert a.found == b.found


def test_doubled_tree_examples():
    assert is_doubled_tree(cycle_graph(2))
    W = wedge_sum(cycle_graph(2), 1, cycle_graph(2), 0)
    assert is_doubled_tree(W)
    assert jacobian_laplacian(W).invariant_factors == (2, 2)
    assert not is_doubled_tree(cycle_graph(3))
    assert not is_doubled_tree(banana_graph(3))


def test_doubled_tree_characterization():
    assert verify_doubled_tree_characterization(SearchBounds(6, 8)).passed


def test_lower_bound_examples():
    assert jacobian_laplacian(banana_graph(3)).exponent >= 3
    assert jacobian_laplacian(complete_graph(4)).exponent == 4
    for n in range(2, 8):
        assert jacobian_laplacian(cycle_graph(n)).exponent == n


def test_lower_bound_sweep_biconnected():
    rep = lower_bound_sweep(SearchBounds(6, 8))
    assert rep.checks["exponent >= max degree (biconnected)"] == "pass"
    assert rep.details["biconnected_examined"] > 100


def test_lower_bound_sweep_reports_cut_vertex_counterexamples():
    rep = lower_bound_sweep(SearchBounds(3, 2))
    assert rep.checks["exponent >= max degree (connected)"] == "fail"
    assert rep.details["violations"] == ["3 2\n0 2\n1 2\n"]


def test_matroid_classification_small():
    r = classify_regular_matroids_exp2(SearchBounds(max_rank=2, max_elements=4))
    assert r.matched
    assert r.details["max_elements_found"] == 2
