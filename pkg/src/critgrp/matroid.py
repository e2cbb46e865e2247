"""Regular matroids given by totally unimodular representations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .caps import CIRCUIT_MAX_ELEMENTS, TU_MAX_DIM, check_cap
from .groups import AbelianGroup
from .lattice import jacobian_dual_cut, projection_and_dual
from .linalg import IntegerMatrix, as_matrix, determinant, matmul, matvec, rank, transpose
from .report import CheckReport


class MatroidError(ValueError):
    pass


def is_totally_unimodular(A, cap: int = TU_MAX_DIM) -> bool:
    """Every square submatrix has determinant in ``{-1, 0, 1}`` (brute force)."""
    r = len(A)
    c = len(A[0]) if A else 0
    check_cap("min(rows, cols) for the TU test", min(r, c), cap)
    if any(x not in (-1, 0, 1) for row in A for x in row):
        return False
    for k in range(2, min(r, c) + 1):
        for rows in itertools.combinations(range(r), k):
            sub_rows = [A[i] for i in rows]
            for cols in itertools.combinations(range(c), k):
                if determinant([[row[j] for j in cols] for row in sub_rows]) not in (-1, 0, 1):
                    return False
    return True


@dataclass(frozen=True)
class RegularMatroidRep:
    """A regular matroid: its elements are the columns of a TU matrix.

    Total unimodularity is checked on construction unless ``verify_tu`` is
    false, in which case the caller vouches for it.
    """

    matrix: IntegerMatrix
    verify_tu: bool = field(default=True, compare=False)

    def __post_init__(self):
        M = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", M)
        if any(x not in (-1, 0, 1) for row in M for x in row):
            raise MatroidError("entries must lie in {-1, 0, 1}")
        if len({len(r) for r in M}) > 1:
            raise MatroidError("ragged matrix")
        if self.verify_tu and not is_totally_unimodular(M):
            raise MatroidError("matrix is not totally unimodular")

    @property
    def size(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def column(self, e: int) -> tuple[int, ...]:
        return tuple(row[e] for row in self.matrix)

    def rank_of(self, elements) -> int:
        cols = [self.column(e) for e in elements]
        return rank(cols) if cols else 0


def has_loop(M: RegularMatroidRep) -> bool:
    return any(not any(M.column(e)) for e in range(M.size))


def circuits(M: RegularMatroidRep, cap: int = CIRCUIT_MAX_ELEMENTS) -> list[frozenset]:
    """Minimal dependent column sets, smallest first."""
    check_cap("element count", M.size, cap)
    found: list[frozenset] = []
    for k in range(1, M.size + 1):
        for S in itertools.combinations(range(M.size), k):
            s = frozenset(S)
            if any(c <= s for c in found):
                continue
            if M.rank_of(S) < k:
                found.append(s)
    return found


def is_connected_matroid(M: RegularMatroidRep, cap: int = CIRCUIT_MAX_ELEMENTS) -> bool:
    """Every two distinct elements share a circuit."""
    if M.size <= 1:
        return True
    parent = list(range(M.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for C in circuits(M, cap):
        items = sorted(C)
        for e in items[1:]:
            parent[find(e)] = find(items[0])
    return len({find(e) for e in range(M.size)}) == 1


def matroid_jacobian(M: RegularMatroidRep) -> AbelianGroup:
    return jacobian_dual_cut(M.matrix)


def bases_count(M: RegularMatroidRep, cap: int = CIRCUIT_MAX_ELEMENTS) -> int:
    check_cap("element count", M.size, cap)
    r = M.rank_of(range(M.size))
    return sum(1 for S in itertools.combinations(range(M.size), r) if M.rank_of(S) == r)


def gram_determinant(M: RegularMatroidRep) -> int:
    """``det(A A^T)``; counts bases when ``A`` is TU with full row rank."""
    A = M.matrix
    return determinant(matmul(A, transpose(A)))


def projection(M: RegularMatroidRep):
    return projection_and_dual(M.matrix).projection


def _nonzero_per_row(P) -> list[int]:
    return [sum(1 for x in row if x) for row in P]


def exponent2_structure_check(M: RegularMatroidRep) -> CheckReport:
    """Structure forced on the cut-space projection when ``Jac(M)`` has exponent ≤ 2.

    Applies to connected loopless matroids with at least two elements. The
    conditions: entries in ``{0, ±1/2}``, symmetric, diagonal ``1/2``, exactly
    two nonzero entries per row, the partner ``j`` of each ``i`` satisfies
    ``P(e_i - 2 P_ij e_j) = 0`` and ``{i, j}`` is a circuit, and at most two
    elements in total.
    """
    report = CheckReport("exponent-2 structure")
    if has_loop(M):
        raise MatroidError("matroid has a loop")
    group = matroid_jacobian(M)
    report.details["invariant_factors"] = list(group.invariant_factors)
    conditions = [
        "entries in {0, +-1/2}",
        "symmetric",
        "diagonal 1/2",
        "two nonzero entries per row",
        "paired columns form a circuit",
        "at most two elements",
    ]
    if group.exponent > 2 or not is_connected_matroid(M) or M.size < 2:
        for c in conditions:
            report.record(c, None)
        return report
    half = Fraction(1, 2)
    P = projection(M)
    n = M.size
    report.record(conditions[0], all(x in (0, half, -half) for row in P for x in row))
    report.record(conditions[1], all(P[i][j] == P[j][i] for i in range(n) for j in range(n)))
    report.record(conditions[2], all(P[i][i] == half for i in range(n)))
    report.record(conditions[3], all(k == 2 for k in _nonzero_per_row(P)))
    circ = set(circuits(M))
    paired = True
    for i in range(n):
        partners = [j for j in range(n) if j != i and P[i][j]]
        if len(partners) != 1:
            paired = False
            break
        j = partners[0]
        v = [0] * n
        v[i] = 1
        v[j] = -2 * P[i][j]
        paired = paired and not any(matvec(P, v)) and frozenset((i, j)) in circ
    report.record(conditions[4], paired)
    report.record(conditions[5], n <= 2)
    return report


def exponent3_entry_diagnostics(M: RegularMatroidRep) -> CheckReport:
    """Entry conditions on the projection when ``Jac(M)`` has exponent exactly 3.

    Diagnostic only. The conditions are expected for connected matroids; a
    coloop contributes a diagonal entry 1 and fails them.
    """
    report = CheckReport("exponent-3 diagnostics")
    if has_loop(M):
        raise MatroidError("matroid has a loop")
    group = matroid_jacobian(M)
    report.details["invariant_factors"] = list(group.invariant_factors)
    conditions = [
        "entries in {0, +-1/3, +-2/3}",
        "diagonal in {1/3, 2/3}",
        "three nonzero entries per row and column",
        "off-diagonal entries in {0, +-1/3}",
    ]
    if group.exponent != 3:
        for c in conditions:
            report.record(c, None)
        return report
    third = Fraction(1, 3)
    P = projection(M)
    n = M.size
    allowed = {0, third, -third, 2 * third, -2 * third}
    report.record(conditions[0], all(x in allowed for row in P for x in row))
    report.record(conditions[1], all(P[i][i] in (third, 2 * third) for i in range(n)))
    report.record(
        conditions[2],
        all(k == 3 for k in _nonzero_per_row(P)) and all(k == 3 for k in _nonzero_per_row(transpose(P))),
    )
    report.record(
        conditions[3],
        all(P[i][j] in (0, third, -third) for i in range(n) for j in range(n) if i != j),
    )
    return report
