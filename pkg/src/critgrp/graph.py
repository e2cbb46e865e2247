"""Finite undirected multigraphs without self-loops."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .caps import CANONICAL_FORM_MAX_VERTICES, check_cap
from .linalg import IntegerMatrix, determinant


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``0..n-1``; ``edges`` is an ordered list of unordered pairs.

    The position of an edge in ``edges`` is its index in every matrix built
    from the graph. Parallel edges are allowed, self-loops are not.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {{{u}, {v}}} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicity_matrix(self) -> list[list[int]]:
        A = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            A[u][v] += 1
            A[v][u] += 1
        return A

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out


@dataclass(frozen=True)
class Orientation:
    """``arcs[e] = (tail, head)`` for every edge index ``e``."""

    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def default(cls, G: Multigraph) -> "Orientation":
        return cls(tuple((min(u, v), max(u, v)) for u, v in G.edges))

    @classmethod
    def from_flips(cls, G: Multigraph, flips: Sequence[bool]) -> "Orientation":
        base = cls.default(G).arcs
        return cls(tuple((h, t) if f else (t, h) for (t, h), f in zip(base, flips)))

    def tail(self, e: int) -> int:
        return self.arcs[e][0]

    def head(self, e: int) -> int:
        return self.arcs[e][1]

    def check(self, G: Multigraph) -> None:
        if len(self.arcs) != G.m:
            raise GraphError("orientation has the wrong number of edges")
        for (t, h), (u, v) in zip(self.arcs, G.edges):
            if {t, h} != {u, v}:
                raise GraphError(f"arc {t}->{h} does not match edge {{{u}, {v}}}")


# ---------------------------------------------------------------------------
# standard families


def cycle_graph(n: int) -> Multigraph:
    """``C_n``; ``C_2`` is a doubled edge."""
    if n < 2:
        raise GraphError("cycles need at least 2 vertices")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def banana_graph(m: int) -> Multigraph:
    """Two vertices joined by ``m`` parallel edges."""
    return Multigraph(2, ((0, 1),) * m)


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple(itertools.combinations(range(n), 2)))


def cyclic_orientation(G: Multigraph) -> Orientation:
    """Orient every edge ``(u, v)`` as listed, ``u -> v``."""
    return Orientation(tuple(G.edges))


# ---------------------------------------------------------------------------
# matrices


def incidence_matrix(G: Multigraph, o: Orientation | None = None) -> IntegerMatrix:
    """``n × m`` matrix with ``+1`` at the head and ``-1`` at the tail of each edge."""
    o = o or Orientation.default(G)
    o.check(G)
    D = [[0] * G.m for _ in range(G.n)]
    for e, (t, h) in enumerate(o.arcs):
        D[h][e] = 1
        D[t][e] = -1
    return tuple(tuple(r) for r in D)


def laplacian(G: Multigraph) -> IntegerMatrix:
    A = G.multiplicity_matrix()
    deg = G.degrees()
    return tuple(
        tuple(deg[i] if i == j else -A[i][j] for j in range(G.n)) for i in range(G.n)
    )


def reduced_laplacian(G: Multigraph) -> IntegerMatrix:
    """Laplacian with the last row and column deleted."""
    L = laplacian(G)
    return tuple(row[:-1] for row in L[:-1])


# ---------------------------------------------------------------------------
# connectivity


def components(n: int, edges: Iterable[tuple[int, int]], removed: int | None = None) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n - (removed is not None)
    for u, v in edges:
        if removed in (u, v):
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(G: Multigraph) -> bool:
    return components(G.n, G.edges) <= 1


def require_connected(G: Multigraph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("graph is not connected")


def is_biconnected(G: Multigraph) -> bool:
    """Connected, and still connected after deleting any one vertex.

    ``K_1`` and a single edge count as biconnected.
    """
    if not is_connected(G):
        return False
    return all(components(G.n, G.edges, removed=v) <= 1 for v in range(G.n))


def spanning_tree_count(G: Multigraph) -> int:
    """Number of spanning trees, as the determinant of the reduced Laplacian."""
    require_connected(G)
    return determinant(reduced_laplacian(G))


def spanning_trees(G: Multigraph) -> Iterator[tuple[int, ...]]:
    """Brute-force enumeration of spanning trees as tuples of edge indices."""
    if G.n == 0:
        return
    for subset in itertools.combinations(range(G.m), G.n - 1):
        if components(G.n, (G.edges[e] for e in subset)) == 1:
            yield subset


def spanning_tree(G: Multigraph, root: int = 0) -> list[int]:
    """Edge indices of a BFS spanning tree (lowest edge index first)."""
    require_connected(G)
    seen = {root}
    frontier = [root]
    tree = []
    while frontier:
        nxt = []
        for v in frontier:
            for e, (a, b) in enumerate(G.edges):
                if v in (a, b):
                    w = b if a == v else a
                    if w not in seen:
                        seen.add(w)
                        tree.append(e)
                        nxt.append(w)
        frontier = nxt
    return tree


# ---------------------------------------------------------------------------
# constructions


def wedge_sum(G1: Multigraph, v1: int, G2: Multigraph, v2: int) -> Multigraph:
    """Glue ``G1`` and ``G2`` by identifying ``v1`` with ``v2``.

    ``G1`` keeps its labels; the vertices of ``G2`` other than ``v2`` follow
    in order, and ``v2`` becomes ``v1``.
    """
    if not 0 <= v1 < G1.n:
        raise GraphError(f"vertex {v1} not in first graph")
    if not 0 <= v2 < G2.n:
        raise GraphError(f"vertex {v2} not in second graph")

    def relabel(w):
        if w == v2:
            return v1
        return G1.n + (w if w < v2 else w - 1)

    edges = G1.edges + tuple((relabel(a), relabel(b)) for a, b in G2.edges)
    return Multigraph(G1.n + G2.n - 1, edges)


def simple_skeleton(G: Multigraph) -> tuple[Multigraph, dict[tuple[int, int], int]]:
    """Collapse each parallel class to one edge; also return class sizes."""
    mult: dict[tuple[int, int], int] = {}
    for u, v in G.edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    return Multigraph(G.n, tuple(sorted(mult))), mult


# ---------------------------------------------------------------------------
# isomorphism


def _refined_colors(A: list[list[int]]) -> list[int]:
    n = len(A)
    colors = [sum(row) for row in A]
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], A[v][w]) for w in range(n) if A[v][w])))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(G: Multigraph, refine: bool = True) -> tuple:
    """Isomorphism-invariant key ``(n, upper triangle of multiplicities)``.

    Vertices are first split into cells by iterated degree refinement (an
    isomorphism invariant); only permutations that respect the cell order
    are tried, and the lexicographically least upper triangle wins. With
    ``refine=False`` all ``n!`` permutations are tried.
    """
    check_cap("vertex count", G.n, CANONICAL_FORM_MAX_VERTICES)
    n = G.n
    A = G.multiplicity_matrix()
    if refine:
        colors = _refined_colors(A) if n else []
        cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
        orders = (
            [v for cell in combo for v in cell]
            for combo in itertools.product(*(itertools.permutations(c) for c in cells))
        )
    else:
        orders = itertools.permutations(range(n))
    best = None
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for perm in orders:
        key = tuple(A[perm[i]][perm[j]] for i, j in pairs)
        if best is None or key < best:
            best = key
    return (n, best if best is not None else ())


def from_canonical_form(key: tuple) -> Multigraph:
    n, upper = key
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = []
    for (i, j), k in zip(pairs, upper):
        edges.extend([(i, j)] * k)
    return Multigraph(n, tuple(edges))


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)
