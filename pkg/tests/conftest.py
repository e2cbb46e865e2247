import functools
import itertools

import pytest

from critgrp.classify import SearchBounds, enumerate_connected_multigraphs
from critgrp.graph import Multigraph


@functools.lru_cache(maxsize=None)
def family(max_vertices, max_edges):
    return tuple(enumerate_connected_multigraphs(SearchBounds(max_vertices, max_edges)))


@pytest.fixture(scope="session")
def small_family():
    """Connected multigraphs with <= 5 vertices and <= 7 edges, up to isomorphism."""
    return family(5, 7)


@pytest.fixture(scope="session")
def tiny_family():
    return family(4, 5)


def labelled_connected_multigraphs(n, m):
    """Every connected labelled multigraph on n vertices with m edges (no dedup)."""
    pairs = list(itertools.combinations(range(n), 2))
    from critgrp.graph import is_connected

    for mult in itertools.product(range(m + 1), repeat=len(pairs)):
        if sum(mult) != m:
            continue
        edges = tuple(p for p, k in zip(pairs, mult) for _ in range(k))
        G = Multigraph(n, edges)
        if is_connected(G):
            yield G
