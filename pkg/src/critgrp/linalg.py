"""Exact integer and rational dense linear algebra.

Matrices are plain row-major tuples of tuples. Integer entries are Python
ints, rational entries are :class:`fractions.Fraction` (always in lowest
terms). Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

IntegerMatrix = tuple[tuple[int, ...], ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]


class LatticeError(ValueError):
    """Raised when a lattice operation's preconditions fail."""


# ---------------------------------------------------------------------------
# small helpers


def as_matrix(rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(r) for r in rows)


def shape(A) -> tuple[int, int]:
    if not A:
        return (0, 0)
    return (len(A), len(A[0]))


def identity(n: int) -> IntegerMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntegerMatrix:
    return tuple((0,) * c for _ in range(r))


def transpose(A, ncols: int | None = None) -> tuple:
    """Transpose; ``ncols`` disambiguates the column count of an empty matrix."""
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matmul(A, B) -> tuple:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, x) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def columns(A) -> list[tuple]:
    return list(transpose(A))


def from_columns(cols: Sequence[Sequence], nrows: int) -> tuple:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(zip(*cols))


def determinant(A) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pk * M[i][j] - M[i][k] * M[k][j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


def rank(A) -> int:
    return len(independent_rows(A))


def independent_rows(A) -> list[int]:
    """Indices of a maximal linearly independent set of rows, greedy in order."""
    basis: list[list[Fraction]] = []  # reduced rows with pivot columns
    pivots: list[int] = []
    chosen = []
    for idx, row in enumerate(A):
        v = [Fraction(x) for x in row]
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        for p, x in enumerate(v):
            if x:
                v = [y / x for y in v]
                basis.append(v)
                pivots.append(p)
                chosen.append(idx)
                break
    return chosen


def solve_fraction_free(G, B) -> RationalMatrix:
    """Solve ``G X = B`` for square nonsingular integer ``G``.

    Fraction-free Gauss-Jordan: the augmented matrix ends as
    ``[d I | d X]`` with ``d = ±det G``, so only the last step divides.
    """
    n = len(G)
    k = len(B[0]) if B else 0
    M = [list(G[i]) + list(B[i]) for i in range(n)]
    prev = 1
    for c in range(n):
        if M[c][c] == 0:
            for i in range(c + 1, n):
                if M[i][c] != 0:
                    M[c], M[i] = M[i], M[c]
                    break
            else:
                raise ZeroDivisionError("singular system")
        pc = M[c][c]
        for i in range(n):
            if i == c:
                continue
            mic = M[i][c]
            row = M[i]
            prow = M[c]
            for j in range(n + k):
                num = pc * row[j] - mic * prow[j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                row[j] = q
        prev = pc
    return tuple(tuple(Fraction(M[i][n + j], M[i][i]) for j in range(k)) for i in range(n))


def inverse_rational(A) -> RationalMatrix:
    """Exact inverse of a square rational matrix by Gauss-Jordan."""
    n = len(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[p] = M[p], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return tuple(tuple(r[n:]) for r in M)


def is_integral(A) -> bool:
    return all(Fraction(x).denominator == 1 for row in A for x in row)


def to_int(A) -> IntegerMatrix:
    return tuple(tuple(int(x) for x in row) for row in A)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``A = U S V`` with ``U, V`` unimodular and ``S`` diagonal in Smith form."""

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix
    invariant_factors: tuple[int, ...]


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with transforms.

    Each step pivots on the nonzero entry of least absolute value in the
    remaining block. Row operations on the working matrix are mirrored as
    inverse column operations on ``U`` and column operations as inverse row
    operations on ``V``, so ``A = U @ S @ V`` holds throughout.
    """
    r, c = len(A), (len(A[0]) if A else 0)
    S = [list(row) for row in A]
    U = [list(row) for row in identity(r)]
    V = [list(row) for row in identity(c)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        V[i], V[j] = V[j], V[i]

    def add_row(i, j, f):
        # row_i += f * row_j
        Si, Sj = S[i], S[j]
        for k in range(c):
            Si[k] += f * Sj[k]
        for row in U:
            row[j] -= f * row[i]

    def add_col(i, j, f):
        # col_i += f * col_j
        for row in S:
            row[i] += f * row[j]
        Vi, Vj = V[i], V[j]
        for k in range(c):
            Vj[k] -= f * Vi[k]

    def negate_row(i):
        S[i] = [-x for x in S[i]]
        for row in U:
            row[i] = -row[i]

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = S[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, r):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, c):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, r) if any(S[i][j] % p for j in range(t + 1, c))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            negate_row(t)
        if best is None:
            break

    factors = tuple(S[i][i] for i in range(min(r, c)))
    return SmithDecomposition(as_matrix(U), as_matrix(S), as_matrix(V), factors)


def invariant_factors(A) -> tuple[int, ...]:
    """Nontrivial (> 1) invariant factors of the cokernel of a full-rank ``A``."""
    return tuple(d for d in smith_normal_form(A).invariant_factors if d != 1)


# ---------------------------------------------------------------------------
# Hermite normal form and kernels


def _row_hnf(M: list[list[int]], transform: list[list[int]] | None = None) -> int:
    """In-place row-style HNF of ``M``; returns the rank.

    Rows ``[:rank]`` end in upper echelon form with positive pivots and the
    entries above each pivot reduced into ``[0, pivot)``. Rows ``[rank:]`` are
    zero. Any row operation is mirrored on ``transform`` when given.
    """
    nrows = len(M)
    ncols = len(M[0]) if M else 0

    def swap(i, j):
        M[i], M[j] = M[j], M[i]
        if transform is not None:
            transform[i], transform[j] = transform[j], transform[i]

    def addmul(i, j, f):
        M[i] = [a + f * b for a, b in zip(M[i], M[j])]
        if transform is not None:
            transform[i] = [a + f * b for a, b in zip(transform[i], transform[j])]

    def neg(i):
        M[i] = [-a for a in M[i]]
        if transform is not None:
            transform[i] = [-a for a in transform[i]]

    row = 0
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        while True:
            nz = [i for i in range(row, nrows) if M[i][col]]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(M[k][col]))
            if i != row:
                swap(row, i)
            done = True
            for k in range(row + 1, nrows):
                if M[k][col]:
                    addmul(k, row, -(M[k][col] // M[row][col]))
                    done = done and M[k][col] == 0
            if done:
                break
        if M[row][col] == 0:
            continue
        if M[row][col] < 0:
            neg(row)
        p = M[row][col]
        for k in range(row):
            if M[k][col] < 0 or M[k][col] >= p:
                addmul(k, row, -(M[k][col] // p))
        pivots.append(col)
        row += 1
    return row


def hermite_normal_form(A) -> IntegerMatrix:
    """Column-style HNF of the column lattice of ``A``.

    The result is ``rows × rank``. Column ``j`` has its pivot at row ``p_j``
    with ``p_0 < p_1 < ...``, zeros above the pivot, a positive pivot, and in
    each pivot row the entries of earlier columns reduced into
    ``[0, pivot)``. Two matrices span the same lattice iff their HNFs agree.
    """
    nrows = len(A)
    M = [list(col) for col in transpose(A)]
    rk = _row_hnf(M)
    return from_columns(M[:rk], nrows)


def integer_kernel_basis(A, ncols: int | None = None) -> "Lattice":
    """Saturated basis of ``{x in Z^n : A x = 0}``.

    Row-reduces ``[A^T | I]``; the unimodular transform rows paired with zero
    rows of the reduced ``A^T`` span the full integer kernel.
    """
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    M = [list(col) for col in transpose(A, n)]
    if not A:
        M = [[] for _ in range(n)]
    T = [list(row) for row in identity(n)]
    rk = _row_hnf(M, T) if A else 0
    return Lattice.from_generators(n, T[rk:])


# ---------------------------------------------------------------------------
# projections


def row_space_projection(A) -> RationalMatrix:
    """Orthogonal projection of ``Q^cols`` onto the row space of ``A``.

    Selects a row basis ``M`` and returns ``M^T (M M^T)^{-1} M``.
    """
    n = len(A[0]) if A else 0
    rows = [A[i] for i in independent_rows(A)]
    if not rows:
        return tuple((Fraction(0),) * n for _ in range(n))
    gram = matmul(rows, transpose(rows))
    X = solve_fraction_free(gram, rows)
    return matmul(transpose(rows), X)


# ---------------------------------------------------------------------------
# lattices


def _canonical_columns(ambient_dim: int, gens: Sequence[Sequence]) -> tuple[tuple, ...]:
    gens = [tuple(Fraction(x) for x in g) for g in gens]
    if not gens:
        return ()
    scale = reduce(lcm, (x.denominator for g in gens for x in g), 1)
    M = [[int(x * scale) for x in g] for g in gens]
    rk = _row_hnf(M)
    if scale == 1:
        return tuple(tuple(row) for row in M[:rk])
    return tuple(tuple(Fraction(x, scale) for x in row) for row in M[:rk])


@dataclass(frozen=True)
class Lattice:
    """A lattice in ``Q^ambient_dim`` given by linearly independent columns.

    ``basis`` is stored as a tuple of column vectors. Lattices built with
    :meth:`from_generators` are canonical (column HNF, rational entries
    brought to a common denominator first), so equality of lattices is
    equality of bases.
    """

    ambient_dim: int
    basis: tuple[tuple, ...]

    @classmethod
    def from_generators(cls, ambient_dim: int, gens: Sequence[Sequence]) -> "Lattice":
        return cls(ambient_dim, _canonical_columns(ambient_dim, gens))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> tuple:
        return from_columns(self.basis, self.ambient_dim)

    def canonical(self) -> "Lattice":
        return Lattice.from_generators(self.ambient_dim, self.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Coordinates of ``v`` in this basis, or ``None`` if outside the span."""
        B = self.matrix()
        k = self.rank
        if k == 0:
            return () if not any(v) else None
        rows = independent_rows(B)
        sq = [B[i] for i in rows]
        inv = inverse_rational(sq)
        x = matvec(inv, [v[i] for i in rows])
        if tuple(matvec(B, x)) != tuple(Fraction(t) for t in v):
            return None
        return tuple(x)

    def contains(self, v: Sequence) -> bool:
        x = self.coordinates(v)
        return x is not None and all(t.denominator == 1 for t in x)


def lattice_quotient_invariants(sub: Lattice, sup: Lattice) -> "AbelianGroup":
    """Invariant factors of ``sup / sub`` for equal-rank lattices ``sub ⊆ sup``."""
    from .groups import AbelianGroup

    if sub.ambient_dim != sup.ambient_dim:
        raise LatticeError("lattices live in different ambient spaces")
    if sub.rank != sup.rank:
        raise LatticeError(f"rank mismatch: sub has rank {sub.rank}, super has rank {sup.rank}")
    coords = []
    for col in sub.basis:
        x = sup.coordinates(col)
        if x is None:
            raise LatticeError("sub is not in the span of super")
        if any(t.denominator != 1 for t in x):
            raise LatticeError("sub is not contained in super (non-integral coordinates)")
        coords.append([int(t) for t in x])
    change = from_columns(coords, sup.rank)
    return AbelianGroup.from_factors(smith_normal_form(change).invariant_factors)


def gcd_all(values) -> int:
    return reduce(gcd, values, 0)
