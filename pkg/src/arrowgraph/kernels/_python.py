"""Pure numpy / Python fallback for the numba kernels.

Sampling and unranking are vectorised with numpy.  The search kernels keep
the same traversal order as the compiled versions but hold bitsets as Python
ints, which is the fastest representation available without a compiler.
"""
import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)

_CHUNK = 1 << 20


def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def sample_ranks(key, threshold, take_all, lo, hi):
    if take_all:
        return np.arange(lo, hi, dtype=np.int64)
    k = np.uint64(key)
    thr = np.uint64(threshold)
    parts = []
    with np.errstate(over="ignore"):
        for a in range(lo, hi, _CHUNK):
            r = np.arange(a, min(hi, a + _CHUNK), dtype=np.uint64)
            v = _mix64(k + (r + np.uint64(1)) * _GOLDEN)
            parts.append(r[v < thr].astype(np.int64))
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def colex_unrank(ranks, n, s, binom):
    r = np.asarray(ranks, dtype=np.int64).copy()
    out = np.empty((r.shape[0], s), dtype=np.int64)
    for i in range(s, 0, -1):
        # largest c with C(c, i) <= r; column i is non-decreasing in c
        c = np.searchsorted(binom[:n, i], r, side="right") - 1
        out[:, i - 1] = c
        r -= binom[c, i]
    return out


def _rows_as_ints(bits):
    n = bits.shape[0]
    raw = np.ascontiguousarray(bits).view(np.uint8).reshape(n, -1)
    return [int.from_bytes(raw[v].tobytes(), "little") for v in range(n)]


def _walk(nbrs, t, lo, hi, limit, sink):
    count = 0
    clique = [0] * t

    def extend(depth, cand):
        nonlocal count
        if depth == t - 1 and sink is None:
            count += cand.bit_count()
            return limit > 0 and count >= limit
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            clique[depth] = u
            if depth == t - 1:
                sink.append(tuple(clique))
                count += 1
                continue
            nxt = cand & nbrs[u]
            if nxt.bit_count() < t - depth - 1:
                continue
            if extend(depth + 1, nxt):
                return True
        return False

    for v in range(lo, hi):
        clique[0] = v
        cand = nbrs[v] >> (v + 1) << (v + 1)
        if cand.bit_count() < t - 1:
            continue
        if extend(1, cand):
            return limit
    return count


def count_cliques(bits, t, lo, hi, limit):
    return _walk(_rows_as_ints(bits), t, lo, hi, limit, None)


def list_cliques(bits, t, lo, hi):
    sink = []
    _walk(_rows_as_ints(bits), t, lo, hi, 0, sink)
    if not sink:
        return np.empty((0, t), dtype=np.int64)
    return np.array(sink, dtype=np.int64)


def arrow_search(m, red_ptr, red_idx, blue_ptr, blue_idx, budget, col):
    ptrs = (red_ptr.tolist(), blue_ptr.tolist())
    idxs = (red_idx.tolist(), blue_idx.tolist())
    c_ = [-1] * m
    nodes = 0
    i = 0
    status = 1
    while m:
        if i == m:
            break
        if i < 0:
            status = 0
            break
        c = c_[i] + 1
        if c > 1:
            c_[i] = -1
            i -= 1
            continue
        c_[i] = c
        nodes += 1
        if nodes > budget:
            status = -1
            break
        ptr, idx = ptrs[c], idxs[c]
        for q in range(ptr[i], ptr[i + 1]):
            if all(c_[e] == c for e in idx[q]):
                break
        else:
            i += 1
    col[:m] = c_
    return status, nodes
