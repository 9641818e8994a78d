"""Exact matching counts: perfect matchings, k-matchings, near-perfect counts of
factor-critical components, A-saturating assignments over the auxiliary
multigraph, and the full maximum-matching count."""

from __future__ import annotations

from dataclasses import dataclass

from .blossom import is_factor_critical
from .gallai_edmonds import AuxiliaryBipartite, GEDecomposition, build_auxiliary, decompose
from .graph import CapExceededError, Graph, connected_components, induced_subgraph

DEFAULT_COMPONENT_CAP = 24
_HARD_BITMASK_CAP = 64


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _check_cap(size: int, cap: int, what: str) -> None:
    cap = min(cap, _HARD_BITMASK_CAP)
    if size > cap:
        raise CapExceededError(f"{what} has {size} vertices, exceeding cap {cap}")


def _count_perfect_component(g: Graph, vertices: tuple[int, ...]) -> int:
    """Perfect matchings inside one connected component (bitmask recursion,
    always matching the lowest-index unmatched vertex)."""
    adj = _adj_masks(g)
    memo: dict[int, int] = {}
    full = 0
    for v in vertices:
        full |= 1 << v

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        total = 0
        choices = adj[v] & mask
        while choices:
            u_bit = choices & -choices
            choices ^= u_bit
            total += rec(mask ^ (1 << v) ^ u_bit)
        memo[mask] = total
        return total

    return rec(full)


def count_perfect(g: Graph, cap: int = DEFAULT_COMPONENT_CAP) -> int:
    """Number of perfect matchings; 1 for the empty graph, 0 for odd order."""
    if g.n % 2 == 1:
        return 0
    total = 1
    for comp in connected_components(g):
        if len(comp) % 2 == 1:
            return 0
        _check_cap(len(comp), cap, "component")
        total *= _count_perfect_component(g, comp)
        if total == 0:
            return 0
    return total


def matching_size_profile(g: Graph, cap: int = DEFAULT_COMPONENT_CAP) -> list[int]:
    """[Phi_0, Phi_1, ..., Phi_nu]: matchings of each size, exactly.

    Independent of the blossom module: nu falls out as the largest k with a
    nonzero count.
    """
    adj = _adj_masks(g)

    def component_profile(vertices: tuple[int, ...]) -> list[int]:
        memo: dict[int, tuple[int, ...]] = {}

        def rec(mask: int) -> tuple[int, ...]:
            if mask == 0:
                return (1,)
            cached = memo.get(mask)
            if cached is not None:
                return cached
            v_bit = mask & -mask
            v = v_bit.bit_length() - 1
            counts = list(rec(mask ^ v_bit))  # v stays unmatched
            choices = adj[v] & mask
            while choices:
                u_bit = choices & -choices
                choices ^= u_bit
                sub = rec(mask ^ v_bit ^ u_bit)
                if len(counts) < len(sub) + 1:
                    counts.extend([0] * (len(sub) + 1 - len(counts)))
                for k, c in enumerate(sub):
                    counts[k + 1] += c
            result = tuple(counts)
            memo[mask] = result
            return result

        full = 0
        for v in vertices:
            full |= 1 << v
        return list(rec(full))

    profile = [1]
    for comp in connected_components(g):
        _check_cap(len(comp), cap, "component")
        cp = component_profile(comp)
        merged = [0] * (len(profile) + len(cp) - 1)
        for i, a in enumerate(profile):
            for j, b in enumerate(cp):
                merged[i + j] += a * b
        profile = merged
    while len(profile) > 1 and profile[-1] == 0:
        profile.pop()
    return profile


def count_k_matchings(g: Graph, k: int, cap: int = DEFAULT_COMPONENT_CAP) -> int:
    """Phi_k(g): the number of matchings with exactly k edges."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    profile = matching_size_profile(g, cap)
    return profile[k] if k < len(profile) else 0


@dataclass(frozen=True)
class NearPerfectCounts:
    """npm = sum over v of M_pm(g - v); pm_minus[w] = M_pm(g - w)."""

    npm: int
    pm_minus: dict[int, int]


def count_near_perfect(g: Graph, cap: int = DEFAULT_COMPONENT_CAP) -> NearPerfectCounts:
    pm_minus = {}
    for w in range(g.n):
        sub, _ = induced_subgraph(g, [v for v in range(g.n) if v != w])
        pm_minus[w] = count_perfect(sub, cap)
    return NearPerfectCounts(sum(pm_minus.values()), pm_minus)


def count_max_factor_critical(g: Graph, cap: int = DEFAULT_COMPONENT_CAP) -> int:
    """Maximum matchings of a factor-critical graph: every near-perfect matching
    is maximum, one per choice of missed vertex."""
    if not is_factor_critical(g):
        raise ValueError("graph is not factor-critical")
    return count_near_perfect(g, cap).npm


def _assignment_sum(aux: AuxiliaryBipartite, weights: list[dict[int, int]],
                    untouched: list[int]) -> int:
    """Sum over injective component assignments z_0..z_{k-1} of
    prod_j weights[j][z_j] * prod_{z not chosen} untouched[z].

    Enumerates exactly the A-saturating matchings of the multigraph, a-vertices
    in ascending order, memoized on the used-component set.
    """
    k = aux.num_a
    full_untouched = 1
    for f in untouched:
        full_untouched *= f
    memo: dict[tuple[int, int], int] = {}

    def rec(j: int, used: int) -> int:
        if j == k:
            leftover = full_untouched
            bits = used
            while bits:
                z_bit = bits & -bits
                bits ^= z_bit
                leftover //= untouched[z_bit.bit_length() - 1]
            return leftover
        key = (j, used)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for z, w in weights[j].items():
            if not used >> z & 1:
                total += w * rec(j + 1, used | 1 << z)
        memo[key] = total
        return total

    return rec(0, 0)


def count_aux_max(aux: AuxiliaryBipartite) -> int:
    """Number of A-saturating matchings of the auxiliary multigraph (1 if A is empty)."""
    weights = [{z: len(att) for z, att in enumerate(aux.attachments[j]) if att}
               for j in range(aux.num_a)]
    return _assignment_sum(aux, weights, [1] * aux.num_components)


@dataclass(frozen=True)
class ComponentRecord:
    size: int
    npm: int


@dataclass(frozen=True)
class CountBreakdown:
    m_pm_c: int
    aux_max: int
    components: tuple[ComponentRecord, ...]
    total: int


def _count_connected(g: Graph, cap: int) -> tuple[int, int, int, list[ComponentRecord]]:
    """(count, m_pm_c, aux_max, component records) for a connected graph."""
    if g.n <= 1:
        return 1, 1, 1, []
    dec = decompose(g)
    if not dec.d:
        return count_perfect(g, cap), count_perfect(g, cap), 1, []
    aux = build_auxiliary(g, dec)
    comp_counts = []
    records = []
    for comp in dec.d_components:
        _check_cap(len(comp), cap, "D-component")
        sub, vmap = induced_subgraph(g, comp)
        pos = {v: i for i, v in enumerate(vmap)}
        near = count_near_perfect(sub, cap)
        comp_counts.append((pos, near))
        records.append(ComponentRecord(len(comp), near.npm))
    gc, _ = induced_subgraph(g, dec.c)
    m_pm_c = count_perfect(gc, cap)
    # weight of choosing component z at a-vertex j: sum over attachment
    # vertices w of the perfect-matching count of the component minus w
    weights = []
    for j in range(aux.num_a):
        wj = {}
        for z, att in enumerate(aux.attachments[j]):
            if att:
                pos, near = comp_counts[z]
                wj[z] = sum(near.pm_minus[pos[w]] for w in att)
        weights.append(wj)
    untouched = [near.npm for _, near in comp_counts]
    master = _assignment_sum(aux, weights, untouched)
    return m_pm_c * master, m_pm_c, count_aux_max(aux), records


def count_maximum_matchings(g: Graph, cap: int = DEFAULT_COMPONENT_CAP
                            ) -> tuple[int, CountBreakdown]:
    """M_max(g) with a breakdown; the product over connected components."""
    total = 1
    m_pm_c = 1
    aux_max = 1
    records: list[ComponentRecord] = []
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        cnt, pm_c, aux, recs = _count_connected(sub, cap)
        total *= cnt
        m_pm_c *= pm_c
        aux_max *= aux
        records.extend(recs)
    return total, CountBreakdown(m_pm_c, aux_max, tuple(records), total)
