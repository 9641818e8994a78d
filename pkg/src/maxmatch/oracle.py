"""Brute-force ground truth: exhaustive enumeration of every matching of a graph.

The value of this module is its obviousness; nothing here shares code with the
counting pipeline it checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CapExceededError, Graph

DEFAULT_ORACLE_VERTEX_CAP = 16
DEFAULT_ORACLE_EDGE_CAP = 24


@dataclass(frozen=True)
class MatchingProfile:
    """Full size histogram of matchings plus maximum-matching witnesses."""

    phi: tuple[int, ...]
    nu: int
    missed_vertices: frozenset[int]
    max_edges: frozenset[tuple[int, int]]

    @property
    def max_count(self) -> int:
        return self.phi[self.nu]


def enumerate_profile(g: Graph,
                      vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP,
                      edge_cap: int = DEFAULT_ORACLE_EDGE_CAP) -> MatchingProfile:
    """Visit every matching once (edges taken in ascending order) and tally."""
    if g.n > vertex_cap:
        raise CapExceededError(f"oracle vertex cap {vertex_cap} exceeded: n={g.n}")
    if g.m > edge_cap:
        raise CapExceededError(f"oracle edge cap {edge_cap} exceeded: m={g.m}")

    edges = g.sorted_edges()
    edge_masks = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    full = (1 << g.n) - 1
    phi = [0] * (g.n // 2 + 1)
    best = {"nu": 0, "missed": full, "edges": set()}
    chosen: list[int] = []

    def visit(size: int, used: int) -> None:
        phi[size] += 1
        if size > best["nu"]:
            best["nu"] = size
            best["missed"] = 0
            best["edges"] = set()
        if size == best["nu"]:
            best["missed"] |= full & ~used
            best["edges"].update(chosen)

    def rec(start: int, used: int) -> None:
        for i in range(start, m):
            if edge_masks[i] & used:
                continue
            chosen.append(i)
            visit(len(chosen), used | edge_masks[i])
            rec(i + 1, used | edge_masks[i])
            chosen.pop()

    visit(0, 0)
    rec(0, 0)

    nu = best["nu"]
    missed = frozenset(v for v in range(g.n) if best["missed"] >> v & 1)
    max_edges = frozenset(edges[i] for i in best["edges"])
    return MatchingProfile(tuple(phi[: nu + 1]), nu, missed, max_edges)
