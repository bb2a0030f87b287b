"""Brute-force references that share no code path with the library."""
from collections import Counter
from itertools import product


def bounded_compositions_count(n, k, s):
    """Occupancy vectors (x_1..x_n), 0 <= x_i <= s, summing to k."""
    if k < 0:
        return 0
    return sum(1 for x in product(range(s + 1), repeat=n) if sum(x) == k)


def bounded_tuples_count(n, k, s):
    return sum(1 for t in product(range(n), repeat=k) if max(Counter(t).values(), default=0) <= s)


def naive_supertoken(n, edges, k, s, distinguishable):
    """Vertices and edge set by pairwise comparison of all configurations."""
    edge_set = {frozenset(e) for e in edges}
    if distinguishable:
        verts = [t for t in product(range(n), repeat=k) if max(Counter(t).values()) <= s]
    else:
        verts = sorted({tuple(sorted(t)) for t in product(range(n), repeat=k)
                        if max(Counter(t).values()) <= s})
    out = set()
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if distinguishable:
                diff = [q for q in range(k) if a[q] != b[q]]
                ok = len(diff) == 1 and frozenset((a[diff[0]], b[diff[0]])) in edge_set
            else:
                ca, cb = Counter(a), Counter(b)
                sym = (ca - cb) + (cb - ca)
                ok = sum(sym.values()) == 2 and len(sym) == 2 and frozenset(sym) in edge_set
            if ok:
                out.add((a, b))
    return verts, out
