"""Cross-module equality suite: oracle enumeration vs the counting pipeline."""

from __future__ import annotations

from .blossom import matching_number
from .counting import count_maximum_matchings, matching_size_profile
from .gallai_edmonds import classify_edges, decompose
from .graph import Graph
from .oracle import (
    DEFAULT_ORACLE_EDGE_CAP,
    DEFAULT_ORACLE_VERTEX_CAP,
    enumerate_profile,
)


def cross_check(g: Graph,
                cap_component: int = 24,
                vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP,
                edge_cap: int = DEFAULT_ORACLE_EDGE_CAP) -> list[str]:
    """Run every cross-module identity on one graph; return mismatch descriptions."""
    mismatches = []
    profile = enumerate_profile(g, vertex_cap, edge_cap)

    nu = matching_number(g)
    if nu != profile.nu:
        mismatches.append(f"nu: blossom={nu} oracle={profile.nu}")

    phi = matching_size_profile(g, cap_component)
    if tuple(phi) != profile.phi:
        mismatches.append(f"phi: dp={phi} oracle={list(profile.phi)}")

    dec = decompose(g)
    if dec.d != profile.missed_vertices:
        mismatches.append(f"D: decompose={sorted(dec.d)} "
                          f"oracle={sorted(profile.missed_vertices)}")

    labels = classify_edges(g, dec)
    allowed = frozenset(e for e, lab in labels.items() if lab == "allowed")
    if allowed != profile.max_edges:
        mismatches.append(f"allowed edges: classify={sorted(allowed)} "
                          f"oracle={sorted(profile.max_edges)}")

    total, _ = count_maximum_matchings(g, cap_component)
    if total != profile.max_count:
        mismatches.append(f"M_max: pipeline={total} oracle={profile.max_count}")
    return mismatches
