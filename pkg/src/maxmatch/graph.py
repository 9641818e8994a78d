"""Immutable simple graphs on dense integer vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

DEFAULT_TREE_CAP = 16


class GraphFormatError(ValueError):
    """Malformed edge-list text."""


class CapExceededError(RuntimeError):
    """An exact-enumeration cap was exceeded; the computation was refused, not truncated."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges, vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, deduplicating edges.  Rejects loops and out-of-range endpoints."""
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    dedup = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"endpoint out of range in edge ({u},{v}) for n={n}")
        dedup.add((min(u, v), max(u, v)))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(dedup):
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, frozenset(dedup), tuple(tuple(sorted(a)) for a in adj))


def generator(kind: str, n: int) -> Graph:
    """Named graph families: path, cycle, star, complete."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        return build_graph(n, [(0, i) for i in range(1, n)])
    if kind == "complete":
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    raise ValueError(f"unknown generator kind {kind!r}")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vertices`, relabeled 0..k-1 in ascending original order.

    Returns (subgraph, index_map) where index_map[i] is the original vertex of
    new vertex i.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    sub_edges = [(pos[u], pos[v]) for (u, v) in g.edges if u in pos and v in pos]
    return build_graph(len(vs), sub_edges), tuple(vs)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def enumerate_free_trees(n: int, cap: int = DEFAULT_TREE_CAP) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of free trees on n vertices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"tree order {n} exceeds cap {cap}")
    if n == 1:
        yield build_graph(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield build_graph(n, [tuple(e) for e in t.edges()])


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: header `n m`, then m lines `u v`; `#` lines ignored."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"malformed header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed edge line {ln!r}") from exc
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text: header, then edges sorted lexicographically."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"
