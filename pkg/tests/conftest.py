import random

import pytest
from hypothesis import strategies as st

from maxmatch.graph import build_graph


@st.composite
def graphs(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(all_pairs), max_size=len(all_pairs))
                 if all_pairs else st.just([]))
    return build_graph(n, edges)


@st.composite
def graphs_with_edge(draw, max_n=10):
    g = draw(graphs(max_n=max_n, min_n=2))
    if not g.edges:
        u = draw(st.integers(min_value=0, max_value=g.n - 2))
        g = build_graph(g.n, list(g.edges) + [(u, u + 1)])
    edge = draw(st.sampled_from(sorted(g.edges)))
    return g, edge


@pytest.fixture
def rng():
    return random.Random(0)
