import pytest
from hypothesis import given, settings

from maxmatch.counting import count_k_matchings
from maxmatch.graph import CapExceededError, build_graph, generator
from maxmatch.oracle import enumerate_profile

from conftest import graphs


def test_p3_profile():
    p = enumerate_profile(generator("path", 3))
    assert p.phi == (1, 2)
    assert p.nu == 1
    assert p.missed_vertices == {0, 2}
    assert p.max_edges == {(0, 1), (1, 2)}


def test_c5_profile():
    p = enumerate_profile(generator("cycle", 5))
    assert p.phi == (1, 5, 5)
    assert p.nu == 2
    assert p.missed_vertices == {0, 1, 2, 3, 4}
    assert len(p.max_edges) == 5


def test_k4_profile():
    p = enumerate_profile(generator("complete", 4))
    assert p.phi == (1, 6, 3)
    assert p.nu == 2


def test_edgeless():
    p = enumerate_profile(build_graph(3, []))
    assert p.phi == (1,)
    assert p.nu == 0
    assert p.missed_vertices == {0, 1, 2}
    assert p.max_edges == frozenset()


def test_caps_raise():
    with pytest.raises(CapExceededError):
        enumerate_profile(generator("path", 17))
    with pytest.raises(CapExceededError):
        enumerate_profile(generator("complete", 8))  # 28 edges > default edge cap


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_phi_matches_counting(g):
    p = enumerate_profile(g)
    for k in range(p.nu + 2):
        expected = p.phi[k] if k <= p.nu else 0
        assert count_k_matchings(g, k) == expected
