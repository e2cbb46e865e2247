"""Cycle and cut lattices, the cut-space projection, and three routes to ``Jac``.

* laplacian: ``Div^0 / Prin`` through the Smith form of the reduced Laplacian;
* edge lattice: ``C_I / (Z_I ⊕ B_I)`` with fundamental cycles and vertex cuts;
* dual cut: ``B_I^# / B_I`` where ``B_I^#`` is generated by the columns of the
  orthogonal projection ``P`` onto the cut space.

The last route only needs a representation matrix, so it also serves regular
matroids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .caps import REDUCED_DIVISOR_MAX_ORDER
from .graph import Multigraph, Orientation, incidence_matrix, reduced_laplacian, require_connected, spanning_tree
from .groups import AbelianGroup
from .linalg import (
    IntegerMatrix,
    Lattice,
    RationalMatrix,
    from_columns,
    integer_kernel_basis,
    lattice_quotient_invariants,
    matvec,
    row_space_projection,
    smith_normal_form,
    transpose,
)
from .report import CheckReport


@dataclass(frozen=True)
class EdgeSpaceDecomposition:
    source: IntegerMatrix
    cycle_basis: Lattice
    cut_basis: Lattice
    projection: RationalMatrix
    dual_cut_basis: Lattice


def _sign_normalize(v: list[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def cycle_lattice_basis(G: Multigraph, o: Orientation | None = None) -> Lattice:
    """Fundamental cycles of a BFS spanning tree, one per non-tree edge.

    Each cycle is signed along its traversal and then flipped so its first
    nonzero entry is positive.
    """
    require_connected(G)
    o = o or Orientation.default(G)
    o.check(G)
    tree = spanning_tree(G)
    tree_set = set(tree)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.n)}
    for e in tree:
        a, b = G.edges[e]
        adj[a].append((b, e))
        adj[b].append((a, e))

    def tree_path(src, dst):
        parent = {src: None}
        stack = [src]
        while stack:
            v = stack.pop()
            for w, e in adj[v]:
                if w not in parent:
                    parent[w] = (v, e)
                    stack.append(w)
        steps = []
        v = dst
        while parent[v] is not None:
            u, e = parent[v]
            steps.append((u, v, e))
            v = u
        return reversed(steps)

    cols = []
    for e in range(G.m):
        if e in tree_set:
            continue
        z = [0] * G.m
        t, h = o.arcs[e]
        z[e] = 1
        # close the cycle by walking the tree from head back to tail
        for a, b, f in tree_path(h, t):
            z[f] += 1 if o.arcs[f] == (a, b) else -1
        cols.append(_sign_normalize(z))
    return Lattice(G.m, tuple(cols))


def cut_lattice_basis(G: Multigraph, o: Orientation | None = None) -> Lattice:
    """Vertex cuts ``b_v`` for every vertex but ``0`` (rows of the incidence matrix)."""
    require_connected(G)
    D = incidence_matrix(G, o)
    return Lattice(G.m, tuple(D[1:]))


def projection_and_dual(Drep) -> EdgeSpaceDecomposition:
    """Cut-space projection ``P`` and the dual cut lattice ``B_I^# = P(Z^m)``.

    ``Z_I`` is the saturated integer kernel of ``Drep`` and ``B_I`` is the
    integer orthogonal complement of ``Z_I``.
    """
    m = len(Drep[0]) if Drep else 0
    Z = integer_kernel_basis(Drep, m)
    B = integer_kernel_basis(transpose(Z.matrix(), m) if Z.rank else (), m)
    P = row_space_projection(Drep) if m else ()
    for b in B.basis:
        if tuple(matvec(P, b)) != tuple(Fraction(x) for x in b):
            raise AssertionError("projection does not fix the cut lattice")
    dual = Lattice.from_generators(m, transpose(P, m) if m else ())
    return EdgeSpaceDecomposition(tuple(Drep), Z, B, P, dual)


def jacobian_laplacian(G: Multigraph) -> AbelianGroup:
    require_connected(G)
    return AbelianGroup.from_factors(smith_normal_form(reduced_laplacian(G)).invariant_factors)


def jacobian_edge_lattice(G: Multigraph, o: Orientation | None = None) -> AbelianGroup:
    """``C_I / (Z_I ⊕ B_I)`` from the Smith form of the stacked ``m × m`` basis."""
    Z = cycle_lattice_basis(G, o)
    B = cut_lattice_basis(G, o)
    stacked = from_columns(Z.basis + B.basis, G.m)
    if Z.rank + B.rank != G.m:
        raise RuntimeError(f"cycle and cut bases have total rank {Z.rank + B.rank}, expected {G.m}")
    factors = smith_normal_form(stacked).invariant_factors
    if 0 in factors:
        raise RuntimeError("stacked cycle/cut basis is singular")
    return AbelianGroup.from_factors(factors)


def jacobian_dual_cut(Drep) -> AbelianGroup:
    dec = projection_and_dual(Drep)
    return lattice_quotient_invariants(dec.cut_basis, dec.dual_cut_basis)


def jacobian_all_routes(G: Multigraph, o: Orientation | None = None, cap: int = REDUCED_DIVISOR_MAX_ORDER) -> dict[str, AbelianGroup | None]:
    """Every route's answer; the reduced-divisor route is ``None`` above ``cap``."""
    from .graph import spanning_tree_count
    from .sandpile import jacobian_by_reduced_divisors

    out: dict[str, AbelianGroup | None] = {
        "laplacian": jacobian_laplacian(G),
        "edge-lattice": jacobian_edge_lattice(G, o),
        "dual-cut": jacobian_dual_cut(incidence_matrix(G, o)),
        "reduced-divisors": None,
    }
    if spanning_tree_count(G) <= cap:
        out["reduced-divisors"] = jacobian_by_reduced_divisors(G, 0, cap)
    return out


def check_definition_equivalence(G: Multigraph, cap: int = REDUCED_DIVISOR_MAX_ORDER) -> CheckReport:
    """All Jacobian routes must give identical invariant factors."""
    report = CheckReport("definition-equivalence")
    routes = jacobian_all_routes(G, cap=cap)
    reference = routes["laplacian"]
    for name, group in routes.items():
        if name == "laplacian":
            continue
        report.record(f"{name} == laplacian", None if group is None else group == reference)
    report.details = {
        "graph": {"n": G.n, "edges": [list(e) for e in G.edges]},
        "routes": {k: None if v is None else list(v.invariant_factors) for k, v in routes.items()},
    }
    return report


def check_exact_sequence(G: Multigraph) -> CheckReport:
    """Image of the incidence matrix equals the degree-zero vectors.

    Checks that every column sums to zero and that each ``e_v - e_w`` along a
    spanning tree lies in the integer column span.
    """
    require_connected(G)
    report = CheckReport("exact-sequence")
    D = incidence_matrix(G)
    cols = transpose(D, G.m)
    report.record("columns have zero sum", all(sum(c) == 0 for c in cols))
    image = Lattice.from_generators(G.n, cols)
    ok = True
    for e in spanning_tree(G):
        v, w = G.edges[e]
        gen = [0] * G.n
        gen[v], gen[w] = 1, -1
        ok = ok and image.contains(gen)
    report.record("tree generators of ker(sum) lie in D(C_I)", ok)
    return report
