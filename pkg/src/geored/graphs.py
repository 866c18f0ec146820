"""Small undirected graphs and the brute-force solution oracle.

Vertices are 1-indexed.  Edges are stored canonically as ascending pairs;
self-loops are rejected, duplicate edges collapse.  The oracle enumerates
subsets directly with no pruning: it is the trusted reference that every
geometric solver is checked against, so simplicity beats speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


class GraphParseError(ValueError):
    """Malformed graph file; the message names the offending line."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def wrap_index(x: int, m: int) -> int:
    """Map any integer into [1, m] (1-indexed modular arithmetic)."""
    return (x - 1) % m + 1


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, canonicalizing edge pairs and rejecting bad ones."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    canonical = set()
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"vertex out of range in edge ({u}, {v}), n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        canonical.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(canonical))


def parse_graph(text: str) -> Graph:
    """Parse the text format: a header line "n m", then m lines "u v".

    Lines starting with '#' and blank lines are ignored.  Duplicate edge
    lines collapse to one edge; self-loops and out-of-range vertices raise
    GraphParseError naming the line number.
    """
    content = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((lineno, stripped))

    if not content:
        raise GraphParseError("line 1: missing header line 'n m'")

    lineno, header = content[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {lineno}: non-integer header {header!r}") from None
    if n < 1 or m < 0:
        raise GraphParseError(f"line {lineno}: invalid counts n={n}, m={m}")

    edge_lines = content[1:]
    if len(edge_lines) < m:
        raise GraphParseError(f"line {lineno}: header promises {m} edges, found {len(edge_lines)}")
    if len(edge_lines) > m:
        extra = edge_lines[m][0]
        raise GraphParseError(f"line {extra}: unexpected content after {m} edge lines")

    edges = set()
    for lineno, line in edge_lines:
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer edge {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"line {lineno}: vertex out of range in edge {u} {v}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop {u} {v}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph (canonical edge order)."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def is_independent_set(g: Graph, t: tuple[int, ...]) -> bool:
    """True iff the entries are distinct and no pair of them is an edge."""
    if len(set(t)) != len(t):
        return False
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(t, 2))


def is_clique(g: Graph, t: tuple[int, ...]) -> bool:
    """True iff the entries are distinct and every pair of them is an edge."""
    if len(set(t)) != len(t):
        return False
    return all(g.has_edge(u, v) for u, v in itertools.combinations(t, 2))


_PREDICATES = {"independent-set": is_independent_set, "clique": is_clique}


def enumerate_solutions(
    g: Graph, k: int, mode: str, ordered: bool = False
) -> list[tuple[int, ...]]:
    """All k-vertex solutions of the given mode, in lexicographic order.

    ordered=False yields one ascending tuple per solution set; ordered=True
    yields every ordering of each set (so k! times as many tuples).
    """
    if mode not in _PREDICATES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {sorted(_PREDICATES)}")
    if not 1 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    predicate = _PREDICATES[mode]
    base = [t for t in itertools.combinations(range(1, g.n + 1), k) if predicate(g, t)]
    if not ordered:
        return base
    return sorted(p for t in base for p in itertools.permutations(t))


def duplicate_vertices(g0: Graph) -> Graph:
    """Two copies per vertex: u and u+n0; each original edge uv becomes the
    four copy edges uv, uv', u'v, u'v'.  Copies of the same vertex are never
    adjacent, so the duplicate may gain independent sets that mix copies of
    one original vertex."""
    if g0.n < 2:
        raise ValueError("duplication needs at least 2 vertices")
    n0 = g0.n
    edges = []
    for u, v in g0.edges:
        edges += [(u, v), (u, v + n0), (u + n0, v), (u + n0, v + n0)]
    return make_graph(2 * n0, edges)
