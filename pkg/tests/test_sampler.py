from math import comb, sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowgraph.errors import BudgetExceeded, InvalidParameter
from arrowgraph.sampler import (
    SampleConfig,
    colex_rank,
    colex_unrank,
    p_for_expected_edges,
    p_range,
    sample_hypergraph,
)


def _mean_and_se(values):
    x = np.asarray(values, dtype=float)
    return x.mean(), x.std(ddof=1) / sqrt(len(x))


def test_p_zero_gives_empty():
    assert len(sample_hypergraph(SampleConfig(10, 3, 0.0, 4))) == 0


def test_p_one_gives_all():
    h = sample_hypergraph(SampleConfig(6, 5, 1.0, 4))
    assert len(h) == comb(6, 5) == 6


def test_edge_count_mean_matches_binomial():
    p = 1e-4
    counts = [len(sample_hypergraph(SampleConfig(30, 5, p, seed))) for seed in range(200)]
    mean, se = _mean_and_se(counts)
    expected = p * comb(30, 5)
    assert expected == pytest.approx(14.2506)
    assert abs(mean - expected) <= 3 * se


def test_expected_edges_probability_mean():
    p = p_for_expected_edges(30, 5, 20)
    assert p == 20 / 142506
    counts = [len(sample_hypergraph(SampleConfig(30, 5, p, seed))) for seed in range(500)]
    mean, se = _mean_and_se(counts)
    assert abs(mean - 20) <= 3 * se


def test_p_for_expected_edges_caps():
    assert p_for_expected_edges(6, 5, 6) == 1.0
    assert p_for_expected_edges(6, 5, 600) == 1.0
    with pytest.raises(InvalidParameter):
        p_for_expected_edges(6, 5, -1)


@pytest.mark.parametrize(
    "n, s, k, lo_exp, hi_exp",
    [(100, 5, 3, -5.0, -3.5), (100, 17, 4, -15.5, -15.4)],
)
def test_p_range_examples(n, s, k, lo_exp, hi_exp):
    lo, hi = p_range(n, s, k)
    assert lo == pytest.approx(100.0**lo_exp, rel=1e-12)
    assert hi == pytest.approx(100.0**hi_exp, rel=1e-12)
    assert lo < hi


def test_p_range_ordered_and_validated():
    for k in range(3, 10):
        lo, hi = p_range(50, k + 2, k)
        assert lo < hi
    with pytest.raises(InvalidParameter):
        p_range(100, 5, 2)
    with pytest.raises(InvalidParameter):
        p_range(100, 3, 4)


def test_determinism():
    cfg = SampleConfig(25, 4, 0.01, 99)
    assert sample_hypergraph(cfg) == sample_hypergraph(cfg)
    assert sample_hypergraph(cfg) != sample_hypergraph(SampleConfig(25, 4, 0.01, 100))


@pytest.mark.parametrize("threads", [2, 3, 8])
def test_threads_do_not_change_output(threads):
    cfg = SampleConfig(40, 5, 2e-4, 7)
    assert sample_hypergraph(cfg, threads=threads) == sample_hypergraph(cfg)


@given(st.integers(5, 14), st.integers(0, 2**64 - 1))
def test_restriction_commutes_with_sampling(n_small, seed):
    big = sample_hypergraph(SampleConfig(16, 3, 0.05, seed))
    small = sample_hypergraph(SampleConfig(n_small, 3, 0.05, seed))
    assert small.edges == tuple(e for e in big.edges if e[-1] < n_small)


def test_inclusion_frequency_of_fixed_set():
    p, trials = 0.2, 4000
    target = (1, 4, 6)
    hits = sum(target in sample_hypergraph(SampleConfig(8, 3, p, seed)).edges for seed in range(trials))
    sigma = sqrt(p * (1 - p) / trials)
    assert abs(hits / trials - p) <= 4 * sigma


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        sample_hypergraph(SampleConfig(40, 5, 0.001, 1), budget=1000, method="hash")


def test_skip_path_for_large_candidate_sets():
    p = p_for_expected_edges(60, 17, 10)
    counts = []
    for seed in range(200):
        h = sample_hypergraph(SampleConfig(60, 17, p, seed))
        assert all(len(e) == 17 for e in h.edges)
        counts.append(len(h))
    mean, se = _mean_and_se(counts)
    assert abs(mean - 10) <= 3 * se


def test_skip_path_matches_hash_distribution():
    p = 0.05
    a = [len(sample_hypergraph(SampleConfig(12, 4, p, s), method="skip")) for s in range(400)]
    mean, se = _mean_and_se(a)
    assert abs(mean - p * comb(12, 4)) <= 3 * se


@given(st.lists(st.integers(0, 200), min_size=5, max_size=5, unique=True))
def test_colex_round_trip(edge):
    e = tuple(sorted(edge))
    assert colex_unrank(colex_rank(e), 5) == e


def test_config_validation_and_parsing():
    with pytest.raises(InvalidParameter):
        SampleConfig(4, 5, 0.1, 0)
    with pytest.raises(InvalidParameter):
        SampleConfig(10, 5, 1.5, 0)
    with pytest.raises(InvalidParameter):
        SampleConfig(10, 5, 0.5, -1)
    cfg = SampleConfig.from_dict({"n": 30, "s": 5, "expected_edges": 20, "seed": 3})
    assert cfg.p == 20 / 142506 and cfg.seed == 3
    with pytest.raises(InvalidParameter):
        SampleConfig.from_dict({"n": 30, "s": 5, "p": 0.1, "expected_edges": 20})
