from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowgraph.core import (
    Graph,
    Hypergraph,
    clique_array,
    cliques_of_size,
    contains_clique,
    count_cliques,
    find_clique,
    is_linear,
    m2_clique,
    primal_graph,
    read_graph,
    read_hypergraph,
    write_graph,
    write_hypergraph,
)
from arrowgraph.errors import InvalidParameter

from conftest import graphs, hypergraphs
from oracles import naive_cliques, naive_is_linear, naive_primal_edges


@pytest.mark.parametrize("t, expected", [(2, Fraction(1, 2)), (3, Fraction(2)), (4, Fraction(5, 2)), (5, Fraction(3))])
def test_m2_clique_values(t, expected):
    assert m2_clique(t) == expected


def test_m2_clique_rejects_small():
    with pytest.raises(InvalidParameter):
        m2_clique(1)


def test_m2_clique_strictly_increasing():
    vals = [m2_clique(t) for t in range(2, 30)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_m2_clique_matches_densest_subclique():
    # for K_t the max over sub-cliques K_j, 3 <= j <= t, is attained at j = t
    for t in range(3, 12):
        best = max(Fraction(comb(j, 2) - 1, j - 2) for j in range(3, t + 1))
        assert m2_clique(t) == best


def test_graph_invariants():
    with pytest.raises(InvalidParameter):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidParameter):
        Graph(3, [(0, 3)])
    g = Graph(4, [(0, 1), (1, 0), (2, 3)])
    assert g.m == 2
    assert g.edges() == [(0, 1), (2, 3)]
    assert (g.adjacency == g.adjacency.T).all()
    with pytest.raises(ValueError):
        g.adjacency[0, 2] = True


def test_hypergraph_canonical_order():
    a = Hypergraph(6, 3, [(5, 1, 2), (0, 4, 3), (2, 1, 5)])
    b = Hypergraph(6, 3, [(0, 3, 4), (1, 2, 5)])
    assert a == b
    assert a.edges == ((0, 3, 4), (1, 2, 5))
    with pytest.raises(InvalidParameter):
        Hypergraph(6, 3, [(0, 0, 1)])
    with pytest.raises(InvalidParameter):
        Hypergraph(6, 3, [(0, 1, 6)])


def test_primal_single_hyperedge_is_clique():
    g = primal_graph(Hypergraph(8, 5, [(0, 1, 2, 3, 4)]))
    assert g.n == 8
    assert set(g.edges()) == set(combinations(range(5), 2))


def test_primal_of_empty_hypergraph():
    assert primal_graph(Hypergraph(6, 3)).m == 0


def test_primal_shared_pair(two_blocks):
    # 10 + 10 pairs, {0,1} counted twice
    expected = len(naive_primal_edges(two_blocks.edges))
    assert expected == 19
    assert primal_graph(two_blocks).m == expected


@given(hypergraphs(), st.data())
def test_primal_monotone_under_removal(h, data):
    if not h.edges:
        return
    drop = data.draw(st.sampled_from(h.edges))
    big = primal_graph(h).adjacency
    small = primal_graph(h.without([drop])).adjacency
    assert not (small & ~big).any()


@given(hypergraphs())
def test_primal_matches_pairs(h):
    assert set(primal_graph(h).edges()) == naive_primal_edges(h.edges)


@given(hypergraphs(max_edges=5))
def test_linear_edge_count_identity(h):
    ok, _ = is_linear(h)
    if not ok:
        return
    # linear: distinct hyperedges share no pair, so every primal edge has one owner
    g = primal_graph(h)
    assert g.m == len(h) * comb(h.s, 2)
    owners = {}
    for e in h.edges:
        for p in combinations(e, 2):
            owners[p] = owners.get(p, 0) + 1
    assert set(owners.values()) <= {1}


def test_cliques_examples(two_blocks):
    k5 = Graph.complete(5)
    assert cliques_of_size(k5, 3) == list(combinations(range(5), 3))
    assert cliques_of_size(Graph.cycle(5), 3) == []
    g = primal_graph(two_blocks)
    brute = naive_cliques(g.n, g.edges(), 5)
    assert len(brute) == 2
    assert cliques_of_size(g, 5) == brute


def test_cliques_small_sizes():
    g = Graph(4, [(0, 1), (2, 3)])
    assert cliques_of_size(g, 1) == [(0,), (1,), (2,), (3,)]
    assert cliques_of_size(g, 2) == g.edges()
    assert cliques_of_size(g, 5) == []
    with pytest.raises(InvalidParameter):
        cliques_of_size(g, 0)


@given(graphs(max_n=12), st.integers(1, 6))
def test_cliques_match_naive(g, t):
    expected = naive_cliques(g.n, g.edges(), t)
    assert cliques_of_size(g, t) == expected
    assert count_cliques(g, t) == len(expected)
    assert contains_clique(g, t) == bool(expected)
    assert find_clique(g, t) == (expected[0] if expected else None)


def test_cliques_wide_graph_crosses_word_boundaries(rng):
    n = 150
    upper = np.triu(rng.random((n, n)) < 0.3, 1)
    g = Graph.from_adjacency(upper | upper.T)
    for t in (3, 4):
        arr = clique_array(g, t)
        # spot-check every reported clique and the count against a numpy triangle formula
        assert all(g.adjacency[c[i], c[j]] for c in arr[:500] for i, j in combinations(range(t), 2))
        assert (np.diff(arr[:, 0]) >= 0).all()
    a = g.adjacency.astype(np.int64)
    assert count_cliques(g, 3) == int(np.trace(a @ a @ a)) // 6


@given(graphs(max_n=12), st.integers(2, 5), st.integers(2, 8))
def test_clique_threads_identical(g, t, threads):
    assert clique_array(g, t, threads).tolist() == clique_array(g, t, 1).tolist()
    assert count_cliques(g, t, threads) == count_cliques(g, t)


@pytest.mark.parametrize(
    "edges, linear",
    [
        ([(0, 1, 2, 3, 4), (4, 5, 6, 7, 8)], True),
        ([(0, 1, 2, 3, 4), (0, 1, 5, 6, 7)], False),
        ([(0, 1, 2, 3, 4)], True),
    ],
)
def test_is_linear_examples(edges, linear):
    ok, witness = is_linear(Hypergraph(9, 5, edges))
    assert ok is linear
    if not linear:
        assert set(witness) == {(0, 1, 2, 3, 4), (0, 1, 5, 6, 7)}
    else:
        assert witness is None


@given(hypergraphs())
def test_is_linear_matches_naive(h):
    ok, witness = is_linear(h)
    assert ok == naive_is_linear(h.edges)
    if not ok:
        assert len(set(witness[0]) & set(witness[1])) >= 2


def test_file_round_trips(tmp_path, two_blocks):
    g = primal_graph(two_blocks)
    write_graph(g, tmp_path / "g.txt")
    assert (tmp_path / "g.txt").read_text().splitlines()[0] == "8 19"
    assert read_graph(tmp_path / "g.txt") == g
    write_hypergraph(two_blocks, tmp_path / "h.json")
    assert read_hypergraph(tmp_path / "h.json") == two_blocks


def test_hypergraph_load_canonicalises(tmp_path):
    (tmp_path / "h.json").write_text('{"n": 6, "s": 3, "edges": [[5, 4, 3], [2, 0, 1]]}')
    assert read_hypergraph(tmp_path / "h.json").edges == ((0, 1, 2), (3, 4, 5))


def test_graph_file_count_mismatch(tmp_path):
    (tmp_path / "g.txt").write_text("3 2\n0 1\n")
    with pytest.raises(InvalidParameter):
        read_graph(tmp_path / "g.txt")
