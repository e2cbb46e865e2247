"""Text formats for graphs, divisors and matroid representations.

Graph:    first line ``n m``, then ``m`` lines ``u v`` (0-based vertices).
Divisor:  one line of ``n`` integers.
Matroid:  first line ``r n``, then ``r`` lines of ``n`` entries in {-1, 0, 1}.

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

from .graph import GraphError, Multigraph


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


def _ints(tokens: list[str], where: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"{where}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Multigraph:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty graph file")
    header = _ints(lines[0], "header")
    if len(header) != 2:
        raise ParseError("graph header must be 'n m'")
    n, m = header
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for i, tokens in enumerate(body, 1):
        pair = _ints(tokens, f"edge {i}")
        if len(pair) != 2:
            raise ParseError(f"edge {i}: expected 'u v'")
        edges.append(tuple(pair))
    try:
        return Multigraph(n, tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_divisor(text: str, n: int | None = None) -> tuple[int, ...]:
    lines = _lines(text)
    if len(lines) != 1:
        raise ParseError("divisor file must hold exactly one line of integers")
    d = tuple(_ints(lines[0], "divisor"))
    if n is not None and len(d) != n:
        raise ParseError(f"divisor has {len(d)} entries, graph has {n} vertices")
    return d


def parse_matroid(text: str) -> tuple[tuple[int, ...], ...]:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty matroid file")
    header = _ints(lines[0], "header")
    if len(header) != 2:
        raise ParseError("matroid header must be 'r n'")
    r, n = header
    rows = [tuple(_ints(tokens, f"row {i}")) for i, tokens in enumerate(lines[1:], 1)]
    if len(rows) != r:
        raise ParseError(f"header announces {r} rows, found {len(rows)}")
    for i, row in enumerate(rows, 1):
        if len(row) != n:
            raise ParseError(f"row {i} has {len(row)} entries, expected {n}")
        if any(x not in (-1, 0, 1) for x in row):
            raise ParseError(f"row {i} has entries outside {{-1, 0, 1}}")
    return tuple(rows)


def format_graph(G: Multigraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def format_matroid(A) -> str:
    n = len(A[0]) if A else 0
    return "\n".join([f"{len(A)} {n}"] + [" ".join(map(str, row)) for row in A]) + "\n"
