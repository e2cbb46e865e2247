"""Bounded exhaustive searches over small multigraphs and TU matrices.

Every statement checked here quantifies over all graphs or matroids; these
searches only ever establish it inside the given bounds.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from .caps import CANONICAL_FORM_MAX_VERTICES, ENUMERATION_MAX_EDGES, check_cap
from .fileio import format_graph as graph_to_text
from .fileio import format_matroid as matroid_to_text
from .graph import (
    Multigraph,
    banana_graph,
    canonical_form,
    cycle_graph,
    from_canonical_form,
    is_biconnected,
    path_graph,
    simple_skeleton,
)
from .lattice import jacobian_laplacian
from .matroid import RegularMatroidRep, exponent2_structure_check, is_connected_matroid, is_totally_unimodular, matroid_jacobian
from .report import CheckReport


@dataclass(frozen=True)
class SearchBounds:
    max_vertices: int = 6
    max_edges: int = 8
    max_rank: int = 3
    max_elements: int = 5

    def __post_init__(self):
        if min(self.max_vertices, self.max_rank, self.max_elements) < 1 or self.max_edges < 0:
            raise ValueError("search bounds must be positive")


@dataclass
class ClassificationResult:
    kind: str
    k: int
    bounds: SearchBounds
    found: list[tuple[str, list[int]]] = field(default_factory=list)
    expected: list[str] = field(default_factory=list)
    verdict: str = "match"
    details: dict = field(default_factory=dict)

    @property
    def matched(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["found"] = [{"form": f, "invariant_factors": fs} for f, fs in self.found]
        return d


def parallel_map(fn: Callable, items: Iterable, threads: int = 1) -> list:
    """``map`` that fans out over worker processes when ``threads > 1``."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=32))


# ---------------------------------------------------------------------------
# graphs


def _trees(n: int) -> set[tuple]:
    level = {canonical_form(Multigraph(1))}
    for k in range(2, n + 1):
        nxt = set()
        for key in level:
            T = from_canonical_form(key)
            for v in range(k - 1):
                nxt.add(canonical_form(Multigraph(k, T.edges + ((v, k - 1),))))
        level = nxt
    return level


def enumerate_connected_multigraphs(b: SearchBounds) -> Iterator[Multigraph]:
    """Every connected loopless multigraph within the bounds, once per isomorphism class.

    For each vertex count, start from the trees and repeatedly add one edge
    in every possible position, deduplicating by canonical form. Any
    connected multigraph with a cycle has an edge whose removal keeps it
    connected, so every class is reached.
    """
    check_cap("max_vertices", b.max_vertices, CANONICAL_FORM_MAX_VERTICES)
    check_cap("max_edges", b.max_edges, ENUMERATION_MAX_EDGES)
    for n in range(1, b.max_vertices + 1):
        if n - 1 > b.max_edges:
            break
        level = sorted(_trees(n))
        pairs = list(itertools.combinations(range(n), 2))
        for m in range(n - 1, b.max_edges + 1):
            for key in level:
                yield from_canonical_form(key)
            if m == b.max_edges or not pairs:
                break
            nxt = set()
            for key in level:
                G = from_canonical_form(key)
                for p in pairs:
                    nxt.add(canonical_form(Multigraph(n, G.edges + (p,))))
            level = sorted(nxt)


def _graph_record(G: Multigraph) -> tuple[Multigraph, tuple[int, ...], bool]:
    return G, jacobian_laplacian(G).invariant_factors, is_biconnected(G)


def _exponent(factors: tuple[int, ...]) -> int:
    return factors[-1] if factors else 1


def expected_biconnected(k: int) -> list[Multigraph]:
    """The biconnected graphs whose Jacobian has exponent at most ``k``."""
    if k not in (1, 2, 3):
        raise ValueError("graph classification is available for k = 1, 2, 3")
    out = [Multigraph(1), path_graph(2)]
    if k >= 2:
        out.append(cycle_graph(2))
    if k >= 3:
        out += [cycle_graph(3), banana_graph(3)]
    return out


def classify_biconnected_graphs(k: int, b: SearchBounds = SearchBounds(), threads: int = 1) -> ClassificationResult:
    expected = expected_biconnected(k)
    records = parallel_map(_graph_record, enumerate_connected_multigraphs(b), threads)
    found = sorted(
        (canonical_form(G), factors) for G, factors, bic in records if bic and _exponent(factors) <= k
    )
    expected_keys = sorted(canonical_form(G) for G in expected)
    result = ClassificationResult("graphs", k, b)
    result.found = [(graph_to_text(from_canonical_form(key)), list(fs)) for key, fs in found]
    result.expected = [graph_to_text(from_canonical_form(key)) for key in expected_keys]
    result.verdict = "match" if [key for key, _ in found] == expected_keys else "mismatch"
    result.details = {"graphs_examined": len(records)}
    return result


def is_doubled_tree(G: Multigraph) -> bool:
    """Collapsing parallel classes leaves a tree, and no class is larger than 2."""
    skeleton, mult = simple_skeleton(G)
    return skeleton.m == G.n - 1 and all(k <= 2 for k in mult.values())


def verify_doubled_tree_characterization(b: SearchBounds = SearchBounds(), threads: int = 1) -> CheckReport:
    """Exponent ≤ 2 exactly for trees with some edges doubled, within bounds."""
    report = CheckReport("doubled-tree characterization")
    records = parallel_map(_graph_record, enumerate_connected_multigraphs(b), threads)
    forward, backward = [], []
    for G, factors, _ in records:
        small = _exponent(factors) <= 2
        shaped = is_doubled_tree(G)
        if small and not shaped:
            forward.append(graph_to_text(G))
        if shaped and not small:
            backward.append(graph_to_text(G))
    report.record("exponent <= 2 implies doubled tree", not forward)
    report.record("doubled tree implies exponent <= 2", not backward)
    report.details = {
        "graphs_examined": len(records),
        "exponent_le_2": sum(1 for _, f, _ in records if _exponent(f) <= 2),
        "counterexamples": forward + backward,
    }
    return report


def lower_bound_sweep(b: SearchBounds = SearchBounds(), threads: int = 1) -> CheckReport:
    """Compare the exponent with the maximum vertex degree on every graph in bounds.

    Two conditions are reported: over all connected graphs with at least two
    vertices, and over the biconnected ones only. The burning certificate
    behind the bound needs the maximum-degree vertex not to be a cut vertex,
    so only the second is expected to hold in general.
    """
    report = CheckReport("max-degree lower bound")
    records = parallel_map(_graph_record, enumerate_connected_multigraphs(b), threads)
    examined = [(G, f, bic) for G, f, bic in records if G.n >= 2]
    violations = [(G, bic) for G, f, bic in examined if _exponent(f) < max(G.degrees())]
    report.record("exponent >= max degree (connected)", not violations)
    report.record("exponent >= max degree (biconnected)", not any(bic for _, bic in violations))
    report.details = {
        "graphs_examined": len(examined),
        "biconnected_examined": sum(1 for _, _, bic in examined if bic),
        "violations": [graph_to_text(G) for G, _ in violations],
        "biconnected_violations": [graph_to_text(G) for G, bic in violations if bic],
    }
    return report


# ---------------------------------------------------------------------------
# matroids


def _sign_classes(r: int) -> list[tuple[int, ...]]:
    out = []
    for v in itertools.product((-1, 0, 1), repeat=r):
        nz = [x for x in v if x]
        if nz and nz[0] > 0:
            out.append(v)
    return out


def enumerate_loopless_representations(b: SearchBounds) -> Iterator[tuple[tuple[int, ...], ...]]:
    """``{-1, 0, 1}`` matrices with no zero column, one per column multiset up to sign.

    Zero columns are skipped here because loops are filtered out anyway.
    """
    for r in range(1, b.max_rank + 1):
        classes = _sign_classes(r)
        for n in range(1, b.max_elements + 1):
            for cols in itertools.combinations_with_replacement(classes, n):
                yield tuple(zip(*cols))


def _matroid_record(A):
    if not is_totally_unimodular(A):
        return None
    M = RegularMatroidRep(A, verify_tu=False)
    if not is_connected_matroid(M):
        return None
    group = matroid_jacobian(M)
    if group.exponent > 2:
        return (A, group.invariant_factors, None)
    return (A, group.invariant_factors, exponent2_structure_check(M))


def classify_regular_matroids_exp2(b: SearchBounds = SearchBounds(), threads: int = 1) -> ClassificationResult:
    """Connected loopless regular matroids with exponent ≤ 2 have at most two elements."""
    records = [r for r in parallel_map(_matroid_record, enumerate_loopless_representations(b), threads) if r]
    small = [(A, fs, rep) for A, fs, rep in records if rep is not None]
    violations = [
        matroid_to_text(A)
        for A, _, rep in small
        if len(A[0]) > 2 or not rep.passed
    ]
    result = ClassificationResult("matroids", 2, b)
    result.found = [(matroid_to_text(A), list(fs)) for A, fs, _ in small]
    result.expected = ["at most 2 elements; projection structure holds"]
    result.verdict = "mismatch" if violations else "match"
    result.details = {
        "connected_tu_examined": len(records),
        "max_elements_found": max((len(A[0]) for A, _, _ in small), default=0),
        "violations": violations,
    }
    return result
