"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import random
import time

import pytest

from maxmatch.counting import count_k_matchings, count_maximum_matchings
from maxmatch.gallai_edmonds import build_auxiliary, classify_edges, decompose, verify_structure
from maxmatch.generators import enumerate_graphs, random_graphs
from maxmatch.graph import (
    CapExceededError,
    build_graph,
    enumerate_free_trees,
    generator,
)
from maxmatch.opt_trees import consistency_report, extremal_search, gadget_value, opt_tree_count
from maxmatch.oracle import enumerate_profile


@pytest.fixture(scope="module")
def connected_graphs_8():
    return list(enumerate_graphs(8, connected_only=True))


@pytest.fixture(scope="module")
def all_graphs_7():
    return list(enumerate_graphs(7, connected_only=False))


def _report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number} [{name}]: {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed: {detail}"


def test_criterion_1_oracle_equivalence(connected_graphs_8):
    corpus = list(connected_graphs_8)
    for n in range(1, 13):
        corpus.extend(enumerate_free_trees(n))
    corpus.extend(random_graphs(seed=20240601, count=500, max_n=10))
    failures = 0
    for g in corpus:
        profile = enumerate_profile(g, vertex_cap=16, edge_cap=45)
        pipeline, _ = count_maximum_matchings(g)
        dp = count_k_matchings(g, profile.nu)
        if not (pipeline == profile.max_count == dp):
            failures += 1
    _report(1, "oracle equivalence", failures == 0,
            f"{len(corpus)} graphs, {failures} mismatches")


def test_criterion_2_structure_suite():
    violations = 0
    for g in random_graphs(seed=987654321, count=1000, max_n=30):
        dec = decompose(g)
        if not verify_structure(g, dec).ok:
            violations += 1
            continue
        build_auxiliary(g, dec)  # raises SurplusViolation on failure
    _report(2, "Gallai-Edmonds structure", violations == 0,
            f"1000 graphs, {violations} violations")


def test_criterion_3_definition_remark(all_graphs_7):
    failures = 0
    for g in all_graphs_7:
        profile = enumerate_profile(g)
        dec = decompose(g)
        if dec.d != profile.missed_vertices:
            failures += 1
            continue
        allowed = {e for e, lab in classify_edges(g, dec).items() if lab == "allowed"}
        if allowed != set(profile.max_edges):
            failures += 1
    _report(3, "definition/remark operationalization", failures == 0,
            f"{len(all_graphs_7)} graphs, {failures} mismatches")


def test_criterion_4_worked_example_fixture():
    # The source figure defining the worked example's graph is not available in
    # the extracted text, so the fixture cannot be encoded; per the stated
    # conditionality this criterion is covered by criterion 1's oracle suite.
    print("ACCEPTANCE 4 [worked-example fixture]: SKIP "
          "(figure unavailable; replaced by criterion 1 per its conditionality)")
    pytest.skip("worked-example figure unavailable; covered by criterion 1")


def test_criterion_5_base_values():
    expected = {"CL": 11, "C": 8, "CP3": 19, "Cstar": 5,
                "CF": 30, "CFminusL": 21, "CFL": 21}
    ok = all(gadget_value(kind, 1) == v for kind, v in expected.items())
    ok = ok and gadget_value("CL", 2) == 112
    _report(5, "recurrence base values", ok)


PRINTED_VALUES = {
    17: 216, 24: 2187, 31: 22140, 38: 224100,
    12: 41, 19: 418,
    9: 15, 16: 153, 23: 1560, 30: 15807,
    27: 5832, 41: 597861, 48: 6052320, 55: 61268400,
    62: 620136000, 69: 6276690000,
    6: 5, 10: 21, 13: 56, 20: 571, 34: 59049,
    72: 16915082240, 76: 63503190000,
}


def test_criterion_6_printed_values():
    bad = {n: (opt_tree_count(n), v) for n, v in PRINTED_VALUES.items()
           if opt_tree_count(n) != v}
    _report(6, "printed extremal-tree values", not bad, str(bad) if bad else "")


def test_criterion_7_extremal_cross_check():
    printed_small = {6: 5, 7: 8, 8: 11, 9: 15, 10: 21, 12: 41, 13: 56}
    failures = []
    for n in range(4, 14):
        search_max, _ = extremal_search(n)
        if n in printed_small and search_max != printed_small[n]:
            failures.append((n, search_max, printed_small[n]))
    for line in consistency_report(16)[10:]:  # n = 14..16: logged, not asserted
        print(f"  consistency {line.render()}")
    _report(7, "extremal cross-check", not failures, str(failures) if failures else "")


def _performance_instance():
    """60 vertices: six odd-cycle D-components (sizes 9,9,9,9,7,5), |A|=4, |C|=8."""
    rng = random.Random(7)
    edges = []
    offset = 0
    component_spans = []
    for size in (9, 9, 9, 9, 7, 5):
        for i in range(size):
            edges.append((offset + i, offset + (i + 1) % size))
        component_spans.append((offset, size))
        offset += size
    a_start = offset
    for j in range(4):
        for comp_offset, size in component_spans:
            for w in rng.sample(range(size), 2):
                edges.append((a_start + j, comp_offset + w))
    c_start = a_start + 4
    for i in range(4):
        edges.append((c_start + 2 * i, c_start + 2 * i + 1))
    for i in range(8):
        edges.append((rng.randrange(a_start, a_start + 4), c_start + i))
    return build_graph(c_start + 8, edges)


def test_criterion_8_performance():
    g = _performance_instance()
    assert g.n == 60
    start = time.perf_counter()
    dec = decompose(g)
    total, _ = count_maximum_matchings(g)
    elapsed = time.perf_counter() - start
    assert max(dec.component_sizes) <= 12
    assert total > 0

    with pytest.raises(CapExceededError):
        count_maximum_matchings(generator("cycle", 31), cap=24)

    _report(8, "performance", elapsed < 10.0, f"{elapsed:.2f}s for n=60")
