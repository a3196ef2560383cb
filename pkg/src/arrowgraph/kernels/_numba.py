"""Numba-compiled inner loops.

Every function here has a twin in ``_python`` with the same signature and the
same output bit for bit; ``tests/test_kernels.py`` holds them to that.
"""
import numpy as np
from numba import njit

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)

_C1 = np.uint64(0x5555555555555555)
_C2 = np.uint64(0x3333333333333333)
_C4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> _S30)) * _M1
    z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


@njit(cache=True, nogil=True)
def sample_ranks(key, threshold, take_all, lo, hi):
    k = np.uint64(key)
    thr = np.uint64(threshold)
    out = np.empty(hi - lo, dtype=np.int64)
    c = 0
    for r in range(lo, hi):
        if take_all:
            out[c] = r
            c += 1
            continue
        v = _mix64(k + (np.uint64(r) + _ONE) * _GOLDEN)
        if v < thr:
            out[c] = r
            c += 1
    return out[:c].copy()


@njit(cache=True, nogil=True)
def colex_unrank(ranks, n, s, binom):
    m = ranks.shape[0]
    out = np.empty((m, s), dtype=np.int64)
    for j in range(m):
        r = ranks[j]
        c = n - 1
        for i in range(s, 0, -1):
            while binom[c, i] > r:
                c -= 1
            out[j, i - 1] = c
            r -= binom[c, i]
            c -= 1
    return out


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _C1)
    x = (x & _C2) + ((x >> np.uint64(2)) & _C2)
    x = (x + (x >> np.uint64(4))) & _C4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, inline="always")
def _low_index(x):
    # index of the lowest set bit of a nonzero word
    i = 0
    if (x & np.uint64(0xFFFFFFFF)) == _ZERO:
        x >>= np.uint64(32)
        i += 32
    if (x & np.uint64(0xFFFF)) == _ZERO:
        x >>= np.uint64(16)
        i += 16
    if (x & np.uint64(0xFF)) == _ZERO:
        x >>= np.uint64(8)
        i += 8
    if (x & np.uint64(0xF)) == _ZERO:
        x >>= np.uint64(4)
        i += 4
    if (x & np.uint64(0x3)) == _ZERO:
        x >>= np.uint64(2)
        i += 2
    if (x & _ONE) == _ZERO:
        i += 1
    return i


@njit(cache=True, inline="always")
def _next_bit(row, start, n):
    if start >= n:
        return -1
    w = start >> 6
    x = row[w] & (_ALL << np.uint64(start & 63))
    W = row.shape[0]
    while True:
        if x != _ZERO:
            return (w << 6) + _low_index(x)
        w += 1
        if w >= W:
            return -1
        x = row[w]


@njit(cache=True, inline="always")
def _restrict_above(cand, row, adj_row, u):
    # cand := row & adj_row & {v > u}; returns popcount
    W = cand.shape[0]
    pc = 0
    cut = (u + 1) >> 6
    for w in range(W):
        if w < cut:
            cand[w] = _ZERO
            continue
        x = row[w] & adj_row[w]
        if w == cut:
            sh = (u + 1) & 63
            x &= _ALL << np.uint64(sh)
        cand[w] = x
        pc += _popcount(x)
    return pc


@njit(cache=True, nogil=True)
def _walk(bits, t, lo, hi, limit, out):
    n, W = bits.shape
    record = out.shape[0] > 0
    cand = np.zeros((t, W), dtype=np.uint64)
    full = np.empty(W, dtype=np.uint64)
    for w in range(W):
        full[w] = _ALL
    nxt = np.zeros(t, dtype=np.int64)
    clique = np.zeros(t, dtype=np.int64)
    count = 0
    for v in range(lo, hi):
        clique[0] = v
        if _restrict_above(cand[1], full, bits[v], v) < t - 1:
            continue
        depth = 1
        nxt[1] = v + 1
        while depth >= 1:
            if depth == t - 1 and not record:
                count += _popcount_row(cand[depth], nxt[depth])
                if limit > 0 and count >= limit:
                    return limit
                depth -= 1
                continue
            u = _next_bit(cand[depth], nxt[depth], n)
            if u < 0:
                depth -= 1
                continue
            nxt[depth] = u + 1
            clique[depth] = u
            if depth == t - 1:
                for j in range(t):
                    out[count, j] = clique[j]
                count += 1
                continue
            if _restrict_above(cand[depth + 1], cand[depth], bits[u], u) < t - depth - 1:
                continue
            depth += 1
            nxt[depth] = u + 1
    return count


@njit(cache=True, inline="always")
def _popcount_row(row, start):
    pc = 0
    W = row.shape[0]
    w0 = start >> 6
    for w in range(w0, W):
        x = row[w]
        if w == w0:
            x &= _ALL << np.uint64(start & 63)
        pc += _popcount(x)
    return pc


@njit(cache=True, nogil=True)
def count_cliques(bits, t, lo, hi, limit):
    out = np.empty((0, t), dtype=np.int64)
    return _walk(bits, t, lo, hi, limit, out)


@njit(cache=True, nogil=True)
def list_cliques(bits, t, lo, hi):
    total = _walk(bits, t, lo, hi, 0, np.empty((0, t), dtype=np.int64))
    out = np.empty((total, t), dtype=np.int64)
    if total > 0:
        _walk(bits, t, lo, hi, 0, out)
    return out


@njit(cache=True, nogil=True)
def arrow_search(m, red_ptr, red_idx, blue_ptr, blue_idx, budget, col):
    """Backtrack over edge colours (0 red, 1 blue) in index order.

    A clique is attached to the edge of highest index among its edges and is
    only checked when that edge gets coloured.  Returns ``(status, nodes)``
    with status 1 (witness left in ``col``), 0 (exhausted), -1 (budget).
    """
    for e in range(m):
        col[e] = -1
    if m == 0:
        return 1, 0
    nodes = 0
    i = 0
    while True:
        if i == m:
            return 1, nodes
        if i < 0:
            return 0, nodes
        c = col[i] + 1
        if c > 1:
            col[i] = -1
            i -= 1
            continue
        col[i] = c
        nodes += 1
        if nodes > budget:
            return -1, nodes
        if c == 0:
            ptr = red_ptr
            idx = red_idx
        else:
            ptr = blue_ptr
            idx = blue_idx
        ok = True
        width = idx.shape[1]
        for q in range(ptr[i], ptr[i + 1]):
            mono = True
            for j in range(width):
                if col[idx[q, j]] != c:
                    mono = False
                    break
            if mono:
                ok = False
                break
        if ok:
            i += 1
