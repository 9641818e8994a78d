"""Edmonds' blossom algorithm: one maximum matching, the matching number, factor-criticality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of `graph`; mate[v] is v's partner or -1."""

    graph: Graph
    edges: frozenset[tuple[int, int]]
    mate: tuple[int, ...]

    def __post_init__(self):
        for u, v in self.edges:
            assert self.graph.has_edge(u, v)
            assert self.mate[u] == v and self.mate[v] == u
        assert 2 * len(self.edges) == sum(1 for m in self.mate if m >= 0)

    def size(self) -> int:
        return len(self.edges)

    def saturates(self, v: int) -> bool:
        return self.mate[v] >= 0


def _lca(base: list[int], parent: list[int], mate: list[int], a: int, b: int) -> int:
    used = set()
    while True:
        a = base[a]
        used.add(a)
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if b in used:
            return b
        b = parent[mate[b]]


def _mark_path(base: list[int], parent: list[int], mate: list[int],
               in_blossom: list[bool], v: int, ancestor: int, child: int) -> None:
    while base[v] != ancestor:
        in_blossom[base[v]] = True
        in_blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _find_augmenting_path(g: Graph, mate: list[int], root: int) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in g.adjacency[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle closed: contract the blossom
                ancestor = _lca(base, parent, mate, v, to)
                in_blossom = [False] * n
                _mark_path(base, parent, mate, in_blossom, v, ancestor, to)
                _mark_path(base, parent, mate, in_blossom, to, ancestor, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = ancestor
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    # augment along the alternating path back to root
                    while to != -1:
                        prev = parent[to]
                        nxt = mate[prev]
                        mate[to] = prev
                        mate[prev] = to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of g; deterministic for a fixed input."""
    mate = [-1] * g.n
    # greedy seed keeps the number of augmentation phases small
    for u in range(g.n):
        if mate[u] == -1:
            for v in g.adjacency[u]:
                if mate[v] == -1:
                    mate[u] = v
                    mate[v] = u
                    break
    for u in range(g.n):
        if mate[u] == -1:
            _find_augmenting_path(g, mate, u)
    edges = frozenset((v, mate[v]) for v in range(g.n) if 0 <= mate[v] and v < mate[v])
    return Matching(g, edges, tuple(mate))


def matching_number(g: Graph) -> int:
    """nu(g), the size of a maximum matching."""
    return maximum_matching(g).size()


def is_factor_critical(g: Graph) -> bool:
    """True iff g - v has a perfect matching for every vertex v.

    The single vertex is factor-critical; graphs of even order (and the empty
    graph) are not.
    """
    if g.n == 0 or g.n % 2 == 0:
        return False
    if g.n == 1:
        return True
    if len(connected_components(g)) != 1:
        return False
    target = (g.n - 1) // 2
    for v in range(g.n):
        sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        if matching_number(sub) != target:
            return False
    return True
