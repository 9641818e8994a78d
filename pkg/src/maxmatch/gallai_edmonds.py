"""Gallai-Edmonds decomposition: the D/A/C partition, D-components, and the
auxiliary bipartite multigraph between A-vertices and contracted D-components."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .blossom import is_factor_critical, matching_number
from .graph import Graph, connected_components, induced_subgraph

SURPLUS_EXHAUSTIVE_LIMIT = 20
SURPLUS_RANDOM_TRIALS = 10000


class SurplusViolation(RuntimeError):
    """The auxiliary bipartite graph lacks positive surplus; the decomposition is broken."""


@dataclass(frozen=True)
class GEDecomposition:
    """D/A/C partition of a graph, the D-components, and nu."""

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]
    d_components: tuple[tuple[int, ...], ...]
    nu: int

    @property
    def component_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.d_components)

    @property
    def num_components(self) -> int:
        return len(self.d_components)


@dataclass(frozen=True)
class AuxiliaryBipartite:
    """Multigraph H: A-vertices vs contracted D-components, keeping attachment vertices.

    attachments[j][z] lists the vertices w of D-component z with an edge to the
    j-th A-vertex; its length is the edge multiplicity between the two sides.
    """

    a_vertices: tuple[int, ...]
    component_vertices: tuple[tuple[int, ...], ...]
    attachments: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def num_a(self) -> int:
        return len(self.a_vertices)

    @property
    def num_components(self) -> int:
        return len(self.component_vertices)

    def degree(self, j: int) -> int:
        return sum(len(att) for att in self.attachments[j])

    def neighbor_components(self, j: int) -> tuple[int, ...]:
        return tuple(z for z, att in enumerate(self.attachments[j]) if att)


@dataclass
class ClauseCheck:
    clause: str
    ok: bool
    witness: str = ""


@dataclass
class StructureReport:
    checks: list[ClauseCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, clause: str, ok: bool, witness: str = "") -> None:
        self.checks.append(ClauseCheck(clause, ok, witness))


def decompose(g: Graph) -> GEDecomposition:
    """D = vertices missed by some maximum matching (via the nu(g-v)=nu(g) test),
    A = their outside neighbors, C = the rest."""
    nu = matching_number(g)
    d = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub, _ = induced_subgraph(g, rest)
        if matching_number(sub) == nu:
            d.add(v)
    a = {u for v in d for u in g.adjacency[v] if u not in d}
    c = set(range(g.n)) - d - a
    if d:
        gd, dmap = induced_subgraph(g, d)
        comps = tuple(tuple(dmap[i] for i in comp) for comp in connected_components(gd))
    else:
        comps = ()
    return GEDecomposition(frozenset(d), frozenset(a), frozenset(c), comps, nu)


def verify_structure(g: Graph, dec: GEDecomposition) -> StructureReport:
    """Check the structure-theorem clauses against (g, dec); failures become report entries."""
    report = StructureReport()

    parts_disjoint = (not (dec.d & dec.a) and not (dec.d & dec.c) and not (dec.a & dec.c))
    covers = dec.d | dec.a | dec.c == set(range(g.n))
    report.add("partition", parts_disjoint and covers,
               "" if parts_disjoint and covers else f"D={sorted(dec.d)} A={sorted(dec.a)} C={sorted(dec.c)}")

    bad_a = [v for v in dec.a if not any(u in dec.d for u in g.adjacency[v])]
    bad_c = [v for v in dec.c if any(u in dec.d for u in g.adjacency[v])]
    report.add("neighborhoods", not bad_a and not bad_c,
               f"A without D-neighbor: {bad_a}; C with D-neighbor: {bad_c}" if bad_a or bad_c else "")

    bad_comp = None
    for comp in dec.d_components:
        sub, _ = induced_subgraph(g, comp)
        if not is_factor_critical(sub):
            bad_comp = comp
            break
    report.add("factor-critical D-components", bad_comp is None,
               f"component {bad_comp}" if bad_comp else "")

    gc, _ = induced_subgraph(g, dec.c)
    pm_ok = gc.n % 2 == 0 and matching_number(gc) == gc.n // 2
    report.add("perfect matching on C", pm_ok, "" if pm_ok else f"C={sorted(dec.c)}")

    expected = (g.n - dec.num_components + len(dec.a))
    nu_ok = expected % 2 == 0 and dec.nu == expected // 2
    report.add("nu identity", nu_ok,
               "" if nu_ok else f"nu={dec.nu}, (n - r + |A|)/2 = {expected}/2")
    return report


def _check_positive_surplus(aux: AuxiliaryBipartite, rng_seed: int = 0) -> None:
    k = aux.num_a
    if k == 0:
        return
    nbr_masks = []
    for j in range(k):
        mask = 0
        for z in aux.neighbor_components(j):
            mask |= 1 << z
        nbr_masks.append(mask)

    def surplus_ok(subset_mask: int) -> bool:
        union = 0
        size = 0
        for j in range(k):
            if subset_mask >> j & 1:
                union |= nbr_masks[j]
                size += 1
        return union.bit_count() > size

    if k <= SURPLUS_EXHAUSTIVE_LIMIT:
        for subset in range(1, 1 << k):
            if not surplus_ok(subset):
                raise SurplusViolation(f"A-subset mask {subset:#x} has no positive surplus")
    else:
        rng = random.Random(rng_seed)
        for _ in range(SURPLUS_RANDOM_TRIALS):
            subset = rng.randrange(1, 1 << k)
            if not surplus_ok(subset):
                raise SurplusViolation(f"A-subset mask {subset:#x} has no positive surplus")


def build_auxiliary(g: Graph, dec: GEDecomposition) -> AuxiliaryBipartite:
    """Contract each D-component; record, per (A-vertex, component), the attachment vertices."""
    a_vertices = tuple(sorted(dec.a))
    comp_of = {}
    for z, comp in enumerate(dec.d_components):
        for v in comp:
            comp_of[v] = z
    attachments = []
    for v in a_vertices:
        per_comp: list[list[int]] = [[] for _ in dec.d_components]
        for w in g.adjacency[v]:
            if w in comp_of:
                per_comp[comp_of[w]].append(w)
        attachments.append(tuple(tuple(sorted(ws)) for ws in per_comp))
    aux = AuxiliaryBipartite(a_vertices, dec.d_components, tuple(attachments))
    _check_positive_surplus(aux)
    return aux


def classify_edges(g: Graph, dec: GEDecomposition) -> dict[tuple[int, int], str]:
    """Label each edge 'allowed' (lies in some maximum matching) or 'forbidden'."""
    from .counting import count_perfect  # local import: counting depends on this module

    gc, cmap = induced_subgraph(g, dec.c)
    cpos = {v: i for i, v in enumerate(cmap)}
    labels = {}
    for u, v in g.sorted_edges():
        if u in dec.d or v in dec.d:
            labels[(u, v)] = "allowed"
        elif u in dec.c and v in dec.c:
            rest = [i for i in range(gc.n) if i not in (cpos[u], cpos[v])]
            sub, _ = induced_subgraph(gc, rest)
            labels[(u, v)] = "allowed" if count_perfect(sub) > 0 else "forbidden"
        else:
            # induced by A, or joining A to C
            labels[(u, v)] = "forbidden"
    return labels
