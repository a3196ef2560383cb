"""Hot loops, compiled with numba when available.

Set ``ARROWGRAPH_NO_NUMBA=1`` to force the pure numpy/Python path (also used
automatically when numba cannot be imported).  Both paths produce identical
results; only speed differs.
"""
import os

BACKEND = "python"

if os.environ.get("ARROWGRAPH_NO_NUMBA", "").strip().lower() not in ("1", "true", "yes"):
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError:  # pragma: no cover
        _impl = None

if BACKEND == "python":
    from . import _python as _impl

sample_ranks = _impl.sample_ranks
colex_unrank = _impl.colex_unrank
count_cliques = _impl.count_cliques
list_cliques = _impl.list_cliques
arrow_search = _impl.arrow_search

__all__ = [
    "BACKEND",
    "arrow_search",
    "colex_unrank",
    "count_cliques",
    "list_cliques",
    "sample_ranks",
]
