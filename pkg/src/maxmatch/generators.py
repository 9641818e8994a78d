"""Instance generators for cross-validation: exhaustive isomorphism-free small
graphs, seeded random graphs, and random factor-critical graphs via odd-ear
growth."""

from __future__ import annotations

import random
from collections import defaultdict
from itertools import combinations
from typing import Iterator

from .graph import Graph, build_graph


def _adj_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def _invariant(adj: tuple[int, ...]):
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    nbr_deg = tuple(sorted(tuple(sorted(deg[j] for j in range(n) if adj[i] >> j & 1))
                           for i in range(n)))
    tri = tuple(sorted(sum((adj[i] & adj[j]).bit_count()
                           for j in range(n) if adj[i] >> j & 1)
                       for i in range(n)))
    return (n, sum(deg) // 2, tuple(sorted(deg)), nbr_deg, tri)


def _isomorphic(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    n = len(a)
    deg_a = [x.bit_count() for x in a]
    deg_b = [x.bit_count() for x in b]
    order = sorted(range(n), key=lambda i: -deg_a[i])
    perm = [-1] * n
    used = [False] * n

    def backtrack(idx: int) -> bool:
        if idx == n:
            return True
        i = order[idx]
        for j in range(n):
            if used[j] or deg_b[j] != deg_a[i]:
                continue
            if all(((a[i] >> order[t]) & 1) == ((b[j] >> perm[order[t]]) & 1)
                   for t in range(idx)):
                perm[i] = j
                used[j] = True
                if backtrack(idx + 1):
                    return True
                used[j] = False
                perm[i] = -1
        return False

    return backtrack(0)


def _mask_connected(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in range(n):
            if frontier >> i & 1:
                nxt |= adj[i]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _masks_to_graph(adj: tuple[int, ...]) -> Graph:
    n = len(adj)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if adj[i] >> j & 1])


def enumerate_graphs(max_n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on 1..max_n vertices.

    Grows by vertex extension (every connected graph keeps a non-cut vertex, so
    extending connected parents cannot omit a class) with invariant bucketing
    and exact isomorphism dedup.
    """
    level: list[tuple[int, ...]] = [(0,)]
    yield _masks_to_graph(level[0])
    for n in range(2, max_n + 1):
        buckets: dict[object, list[tuple[int, ...]]] = defaultdict(list)
        nxt: list[tuple[int, ...]] = []
        lowest_bits = 0 if not connected_only else 1
        for adj in level:
            k = n - 1
            for bits in range(lowest_bits, 1 << k):
                new = tuple(adj[i] | ((1 << k) if bits >> i & 1 else 0)
                            for i in range(k)) + (bits,)
                if connected_only and not _mask_connected(new):
                    continue
                bucket = buckets[_invariant(new)]
                if not any(_isomorphic(new, seen) for seen in bucket):
                    bucket.append(new)
                    nxt.append(new)
        level = nxt
        for adj in level:
            yield _masks_to_graph(adj)


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Erdos-Renyi style G(n, p); p drawn from the rng when omitted."""
    if p is None:
        p = rng.uniform(0.05, 0.95)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def random_graphs(seed: int, count: int, max_n: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(1, max_n))


def random_factor_critical(rng: random.Random, target_n: int) -> Graph:
    """Grow a factor-critical graph by odd-ear additions starting from an odd cycle."""
    start = rng.choice([3, 5, 7])
    start = min(start, target_n if target_n % 2 == 1 else target_n - 1)
    if start < 3:
        return build_graph(1, [])
    n = start
    edges = {(i, (i + 1) % start) for i in range(start)}
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    while n < target_n - 1:
        u = rng.randrange(n)
        v = rng.randrange(n)
        ear_edges = rng.choice([1, 3, 5])
        if ear_edges == 1:
            if u == v or (min(u, v), max(u, v)) in edges:
                continue
            edges.add((min(u, v), max(u, v)))
            continue
        interior = ear_edges - 1
        path = [u] + list(range(n, n + interior)) + [v]
        n += interior
        for a, b in zip(path, path[1:]):
            edges.add((min(a, b), max(a, b)))
    return build_graph(n, edges)
