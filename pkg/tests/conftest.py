"""Shared graph enumeration helpers for the test suite."""

from functools import lru_cache
from itertools import combinations, permutations

from smallspace.core import ReadOnlyGraph


def _pairs(n):
    return list(combinations(range(n), 2))


def _canon_mask(n, mask, pairs, pair_idx, perms):
    best = mask
    for perm in perms:
        pm = 0
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                a, b = perm[u], perm[v]
                pm |= 1 << pair_idx[(min(a, b), max(a, b))]
        if pm < best:
            best = pm
    return best


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n):
    """All non-isomorphic simple graphs on exactly n vertices."""
    if n == 0:
        return (ReadOnlyGraph(0, []),)
    if n == 1:
        return (ReadOnlyGraph(1, []),)
    pairs = _pairs(n)
    pair_idx = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for smaller in nonisomorphic_graphs(n - 1):
        base = 0
        for u, v in smaller.edges():
            base |= 1 << pair_idx[(u, v)]
        for nbhd in range(2 ** (n - 1)):
            mask = base
            for w in range(n - 1):
                if nbhd >> w & 1:
                    mask |= 1 << pair_idx[(w, n - 1)]
            canon = _canon_mask(n, mask, pairs, pair_idx, perms)
            if canon not in seen:
                seen.add(canon)
                edges = [pairs[i] for i in range(len(pairs)) if canon >> i & 1]
                out.append(ReadOnlyGraph(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def nonisomorphic_tournaments(n):
    """All non-isomorphic tournaments on exactly n vertices."""
    if n <= 1:
        return (ReadOnlyGraph(n, [], directed=True),)
    pairs = _pairs(n)
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for bits in range(2 ** len(pairs)):
        arcs = tuple(
            (u, v) if bits >> i & 1 else (v, u) for i, (u, v) in enumerate(pairs)
        )
        canon = None
        arcset = set(arcs)
        for perm in perms:
            pm = frozenset((perm[u], perm[v]) for u, v in arcset)
            key = tuple(sorted(pm))
            if canon is None or key < canon:
                canon = key
        if canon not in seen:
            seen.add(canon)
            out.append(ReadOnlyGraph(n, arcs, directed=True))
    return tuple(out)


def all_graphs_up_to(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from nonisomorphic_graphs(n)


def petersen():
    return ReadOnlyGraph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )


def complete(n):
    return ReadOnlyGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return ReadOnlyGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
