import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from arrowgraph.core import Graph, Hypergraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def hypergraphs(draw, max_n=14, s=None, max_edges=8):
    s = s if s is not None else draw(st.integers(min_value=3, max_value=5))
    n = draw(st.integers(min_value=s, max_value=max_n))
    edge = st.lists(st.integers(0, n - 1), min_size=s, max_size=s, unique=True)
    edges = draw(st.lists(edge, max_size=max_edges))
    return Hypergraph(n, s, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def two_blocks():
    return Hypergraph(8, 5, [(0, 1, 2, 3, 4), (0, 1, 5, 6, 7)])


@pytest.fixture
def open_triangle():
    # linear, but the primal triangle {0,1,2} lies in no hyperedge
    return Hypergraph(12, 5, [(0, 1, 3, 4, 5), (1, 2, 6, 7, 8), (0, 2, 9, 10, 11)])
