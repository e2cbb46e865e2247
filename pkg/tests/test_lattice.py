import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgrp.graph import (
    Multigraph,
    Orientation,
    banana_graph,
    complete_graph,
    cycle_graph,
    cyclic_orientation,
    incidence_matrix,
    path_graph,
    spanning_tree_count,
    wedge_sum,
)
from critgrp.groups import AbelianGroup
from critgrp.lattice import (
    check_definition_equivalence,
    check_exact_sequence,
    cut_lattice_basis,
    cycle_lattice_basis,
    jacobian_dual_cut,
    jacobian_edge_lattice,
    jacobian_laplacian,
    projection_and_dual,
)
from critgrp.linalg import matmul, matvec, transpose

F = Fraction
C3 = cycle_graph(3)
C3_ORIENTED = cyclic_orientation(C3)


def test_cycle_basis_examples():
    assert cycle_lattice_basis(path_graph(4)).basis == ()
    assert cycle_lattice_basis(C3, C3_ORIENTED).basis == ((1, 1, 1),)
    assert cycle_lattice_basis(cycle_graph(2)).basis == ((1, -1),)


def test_cut_basis_examples():
    assert cut_lattice_basis(path_graph(2)).basis == ((1,),)
    B = cut_lattice_basis(C3)
    assert B.rank == 2 and all(set(c) <= {-1, 0, 1} for c in B.basis)
    assert cut_lattice_basis(banana_graph(3)).basis == ((1, 1, 1),)


def test_projection_examples():
    dec = projection_and_dual(incidence_matrix(path_graph(2)))
    assert dec.projection == ((1,),)
    assert dec.dual_cut_basis == dec.cut_basis.canonical()
    dec = projection_and_dual(incidence_matrix(cycle_graph(2)))
    half = F(1, 2)
    assert dec.projection == ((half, half), (half, half))
    dec = projection_and_dual(incidence_matrix(C3, C3_ORIENTED))
    assert dec.projection == tuple(tuple(F(int(i == j)) - F(1, 3) for j in range(3)) for i in range(3))


def test_route_examples():
    for n in range(2, 8):
        assert jacobian_laplacian(cycle_graph(n)) == AbelianGroup((n,))
        assert jacobian_edge_lattice(cycle_graph(n)) == AbelianGroup((n,))
        assert jacobian_dual_cut(incidence_matrix(cycle_graph(n))) == AbelianGroup((n,))
    assert jacobian_laplacian(banana_graph(3)) == AbelianGroup((3,))
    # K_4: Smith form of the reduced Laplacian [[3,-1,-1],[-1,3,-1],[-1,-1,3]] is diag(1, 4, 4)
    assert jacobian_laplacian(complete_graph(4)) == AbelianGroup((4, 4))
    assert jacobian_edge_lattice(path_graph(4)).is_trivial
    assert jacobian_dual_cut(incidence_matrix(path_graph(3))).is_trivial


def test_definition_equivalence_examples():
    rep = check_definition_equivalence(C3)
    assert rep.passed
    assert set(map(tuple, rep.details["routes"].values())) == {(3,)}
    rep = check_definition_equivalence(complete_graph(4))
    assert rep.passed and rep.details["routes"]["reduced-divisors"] == [4, 4]


def test_exact_sequence_examples():
    for G in (path_graph(2), C3, banana_graph(3), complete_graph(4)):
        assert check_exact_sequence(G).passed


def test_decomposition_invariants(small_family):
    for G in small_family:
        if G.m == 0:
            continue
        D = incidence_matrix(G)
        dec = projection_and_dual(D)
        P = dec.projection
        Z = cycle_lattice_basis(G)
        B = cut_lattice_basis(G)
        assert Z.rank + B.rank == G.m
        for z in Z.basis:
            assert not any(matvec(D, z))
            assert not any(matvec(P, z))
            for b in B.basis:
                assert sum(x * y for x, y in zip(z, b)) == 0
        assert matmul(P, P) == P
        assert transpose(P) == P
        Dt = transpose(D)
        assert matmul(P, Dt) == Dt
        assert all(-1 <= x <= 1 for row in P for x in row)
        # every generator of the dual lattice pairs integrally with the cut lattice
        for x in transpose(P):
            for b in B.basis:
                assert F(sum(a * c for a, c in zip(x, b))).denominator == 1
        # the saturated B_I agrees with the lattice of vertex cuts
        assert dec.cut_basis.canonical() == B.canonical()


@st.composite
def connected_graphs_with_flips(draw):
    n = draw(st.integers(2, 5))
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=5))
    edges = tuple((i, i + 1) for i in range(n - 1)) + tuple(extra)
    G = Multigraph(n, edges)
    flips = draw(st.lists(st.booleans(), min_size=G.m, max_size=G.m))
    return G, Orientation.from_flips(G, flips)


@given(connected_graphs_with_flips())
@settings(max_examples=80, deadline=None)
def test_orientation_invariance(args):
    G, o = args
    ref = jacobian_laplacian(G)
    assert jacobian_edge_lattice(G, o) == ref
    assert jacobian_dual_cut(incidence_matrix(G, o)) == ref
    assert ref.order == spanning_tree_count(G)


def test_wedge_sum_identity(tiny_family):
    graphs = [G for G in tiny_family if G.n <= 3]
    for G1, G2 in itertools.product(graphs, repeat=2):
        for v1, v2 in ((0, 0), (G1.n - 1, G2.n - 1)):
            W = wedge_sum(G1, v1, G2, v2)
            assert jacobian_laplacian(W) == jacobian_laplacian(G1) + jacobian_laplacian(G2)
