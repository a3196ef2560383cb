"""Brute-force reference implementations, deliberately independent of the package internals."""
from itertools import combinations, permutations, product


def naive_cliques(n, edges, t):
    es = {frozenset(e) for e in edges}
    return [
        c for c in combinations(range(n), t)
        if all(frozenset(p) in es for p in combinations(c, 2))
    ]


def naive_primal_edges(hyperedges):
    return {tuple(sorted(p)) for e in hyperedges for p in combinations(e, 2)}


def naive_noncovered(n, hyperedges, k):
    """k-subsets whose pairs all co-occur somewhere but which no single hyperedge contains."""
    pe = naive_primal_edges(hyperedges)
    sets = [set(e) for e in hyperedges]
    out = []
    for c in combinations(range(n), k):
        if all(p in pe for p in combinations(c, 2)) and not any(set(c) <= e for e in sets):
            out.append(c)
    return out


def naive_is_linear(hyperedges):
    return all(len(set(a) & set(b)) <= 1 for a, b in combinations(hyperedges, 2))


def naive_arrows(n, edges, a, b):
    """Try every red/blue colouring.  Returns (arrows, witness dict or None)."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    reds = naive_cliques(n, edges, a)
    blues = naive_cliques(n, edges, b)
    for bits in product((0, 1), repeat=len(edges)):
        col = dict(zip(edges, bits))
        if any(all(col[p] == 0 for p in combinations(q, 2)) for q in reds):
            continue
        if any(all(col[p] == 1 for p in combinations(q, 2)) for q in blues):
            continue
        return False, col
    return True, None


def naive_embeds(pattern_edges, hyperedges):
    """J is hit by distinct hyperedges: try every injective assignment."""
    m = len(pattern_edges)
    if m == 0:
        return True
    for chosen in permutations(range(len(hyperedges)), m):
        if all(set(e) <= set(hyperedges[i]) for e, i in zip(pattern_edges, chosen)):
            return True
    return False


def naive_mono_count(n, colour_of, t, colour):
    """colour_of maps sorted pairs present in the graph to 0/1."""
    return sum(
        1 for c in combinations(range(n), t)
        if all(colour_of.get(p) == colour for p in combinations(c, 2))
    )
