import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgrp.linalg import (
    Lattice,
    LatticeError,
    determinant,
    hermite_normal_form,
    identity,
    integer_kernel_basis,
    inverse_rational,
    lattice_quotient_invariants,
    matmul,
    matvec,
    rank,
    row_space_projection,
    smith_normal_form,
    solve_fraction_free,
    transpose,
)

F = Fraction


def small_matrices(max_rows=4, max_cols=4, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


# ---- Smith normal form -----------------------------------------------------


def test_snf_identity():
    d = smith_normal_form(identity(3))
    assert d.S == identity(3)
    assert d.invariant_factors == (1, 1, 1)


def test_snf_diag_2_3():
    # gcd(2, 3) = 1 and 2 * 3 = 6
    assert smith_normal_form(((2, 0), (0, 3))).S == ((1, 0), (0, 6))


def test_snf_zero():
    d = smith_normal_form(((0,),))
    assert d.S == ((0,),)
    assert d.invariant_factors == (0,)


def test_snf_empty():
    assert smith_normal_form(()).invariant_factors == ()


@given(small_matrices())
@settings(max_examples=200, deadline=None)
def test_snf_reconstructs_and_divides(A):
    A = tuple(map(tuple, A))
    d = smith_normal_form(A)
    assert matmul(matmul(d.U, d.S), d.V) == A
    assert abs(determinant(d.U)) == 1
    assert abs(determinant(d.V)) == 1
    r, c = len(A), len(A[0])
    for i in range(r):
        for j in range(c):
            if i != j:
                assert d.S[i][j] == 0
    fs = d.invariant_factors
    assert all(f >= 0 for f in fs)
    nonzero = [f for f in fs if f]
    assert fs[: len(nonzero)] == tuple(nonzero), "zeros come last"
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == rank(A)


@given(small_matrices(3, 3, -4, 4).filter(lambda A: len(A) == len(A[0])))
@settings(max_examples=100, deadline=None)
def test_snf_product_is_abs_det(A):
    d = smith_normal_form(A)
    prod = 1
    for f in d.invariant_factors:
        prod *= f
    assert prod == abs(determinant(A))


# ---- Hermite normal form ----------------------------------------------------


def test_hnf_already_canonical():
    assert hermite_normal_form(((2, 0), (0, 2))) == ((2, 0), (0, 2))


def test_hnf_index_two():
    H = hermite_normal_form(((1, 1), (1, -1)))
    assert abs(determinant(H)) == 2
    assert H == ((1, 0), (1, 2))


def test_hnf_zero_matrix():
    H = hermite_normal_form(((0, 0), (0, 0)))
    assert H == ((), ())


@given(small_matrices(3, 4, -5, 5))
@settings(max_examples=150, deadline=None)
def test_hnf_same_lattice_and_shape(A):
    A = tuple(map(tuple, A))
    H = hermite_normal_form(A)
    cols = transpose(H, 0) if H and H[0] else ()
    assert len(cols) == rank(A)
    lat_h = Lattice(len(A), tuple(cols))
    lat_a = Lattice.from_generators(len(A), transpose(A))
    assert lat_a.basis == tuple(cols)
    # each original column is an integer combination of the HNF columns
    for col in transpose(A):
        assert lat_h.contains(col)
    # echelon shape: strictly increasing pivot rows, positive pivots, reduced rows
    pivots = []
    for j, col in enumerate(cols):
        p = next(i for i, x in enumerate(col) if x)
        assert col[p] > 0
        pivots.append(p)
        for k in range(j):
            assert 0 <= cols[k][p] < col[p]
    assert pivots == sorted(set(pivots))


# ---- kernels -----------------------------------------------------------------


def test_kernel_one_row():
    assert integer_kernel_basis(((1, -1),)).basis == ((1, 1),)


def test_kernel_cyclic_triangle():
    # incidence of C_3 oriented 0->1->2->0: rows are vertices, columns edges
    D = ((-1, 0, 1), (1, -1, 0), (0, 1, -1))
    assert integer_kernel_basis(D).basis == ((1, 1, 1),)


def test_kernel_invertible():
    assert integer_kernel_basis(((2, 1), (1, 1))).basis == ()


@given(small_matrices(2, 4, -3, 3))
@settings(max_examples=60, deadline=None)
def test_kernel_saturated_against_box(A):
    A = tuple(map(tuple, A))
    n = len(A[0])
    K = integer_kernel_basis(A)
    assert K.rank == n - rank(A)
    for b in K.basis:
        assert not any(matvec(A, b))
    for x in itertools.product(range(-2, 3), repeat=n):
        if not any(matvec(A, x)):
            assert K.contains(x)


# ---- projections -------------------------------------------------------------


def test_projection_single_row():
    assert row_space_projection(((1, -1),)) == ((F(1, 2), F(-1, 2)), (F(-1, 2), F(1, 2)))


def test_projection_identity():
    assert row_space_projection(identity(3)) == identity(3)


def test_projection_triangle():
    D = ((-1, 0, 1), (1, -1, 0), (0, 1, -1))
    expected = tuple(tuple(F(int(i == j)) - F(1, 3) for j in range(3)) for i in range(3))
    assert row_space_projection(D) == expected


@given(small_matrices(3, 4, -3, 3))
@settings(max_examples=100, deadline=None)
def test_projection_identities(A):
    A = tuple(map(tuple, A))
    P = row_space_projection(A)
    assert matmul(P, P) == P
    assert transpose(P) == P
    for row in A:
        assert tuple(matvec(P, row)) == tuple(F(x) for x in row)
    for z in integer_kernel_basis(A).basis:
        assert not any(matvec(P, z))


@given(small_matrices(3, 3, -5, 5).filter(lambda A: len(A) == len(A[0])), small_matrices(3, 2, -5, 5))
@settings(max_examples=100, deadline=None)
def test_fraction_free_solve_matches_inverse(G, B):
    if len(B) != len(G) or determinant(G) == 0:
        return
    X = solve_fraction_free(G, B)
    assert X == matmul(inverse_rational(G), B)


# ---- lattice quotients -------------------------------------------------------


def test_quotient_scaling():
    sub = Lattice.from_generators(2, [(2, 0), (0, 2)])
    sup = Lattice.from_generators(2, [(1, 0), (0, 1)])
    assert lattice_quotient_invariants(sub, sup).invariant_factors == (2, 2)


def test_quotient_index_two():
    sub = Lattice.from_generators(2, [(1, 1), (1, -1)])
    sup = Lattice.from_generators(2, [(1, 0), (0, 1)])
    assert lattice_quotient_invariants(sub, sup).invariant_factors == (2,)


def test_quotient_identity():
    L = Lattice.from_generators(3, [(1, 2, 3), (0, 1, 1)])
    assert lattice_quotient_invariants(L, L).is_trivial


def test_quotient_rejects_non_sublattice():
    sub = Lattice.from_generators(2, [(1, 0), (0, 1)])
    sup = Lattice.from_generators(2, [(2, 0), (0, 2)])
    with pytest.raises(LatticeError):
        lattice_quotient_invariants(sub, sup)


def test_quotient_rejects_rank_mismatch():
    sub = Lattice.from_generators(2, [(1, 0)])
    sup = Lattice.from_generators(2, [(1, 0), (0, 1)])
    with pytest.raises(LatticeError):
        lattice_quotient_invariants(sub, sup)


def test_rational_lattice_canonical():
    a = Lattice.from_generators(2, [(F(1, 2), F(1, 2)), (0, 1)])
    b = Lattice.from_generators(2, [(F(1, 2), F(-1, 2)), (F(1, 2), F(1, 2))])
    assert a == b


@given(small_matrices(3, 3, -4, 4).filter(lambda A: len(A) == len(A[0])))
@settings(max_examples=100, deadline=None)
def test_quotient_order_is_abs_det(A):
    if determinant(A) == 0:
        return
    n = len(A)
    sub = Lattice.from_generators(n, transpose(A))
    sup = Lattice.from_generators(n, identity(n))
    assert lattice_quotient_invariants(sub, sup).order == abs(determinant(A))
