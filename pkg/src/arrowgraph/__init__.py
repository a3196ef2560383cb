"""Graphs that avoid monochromatic K_k in some colouring yet arrow (K_{R(k)-1}, K_{k-1}).

Random uniform hypergraphs are pruned to linear k-conformal ones, their primal
graphs coloured by tiling a Ramsey-critical colouring over each hyperedge, and
the result checked by exhaustive clique and colouring searches.
"""
from .arrowing import ARROWS, NOT_ARROWS, ArrowResult, decide_arrowing, export_cnf, verify_colouring
from .colouring import (
    BLUE,
    RED,
    CriticalColouring,
    EdgeColouring,
    build_witness_colouring,
    builtin_critical,
    count_monochromatic,
    load_critical,
)
from .conformal import PairCover, PruneReport, enumerate_noncovered_cliques, pair_trace, prune_to_conformal
from .core import Graph, Hypergraph, cliques_of_size, is_linear, m2_clique, primal_graph
from .kernels import BACKEND
from .sampler import SampleConfig, p_for_expected_edges, p_range, sample_hypergraph

__version__ = "0.1.0"
