"""Brute-force solvers and target-class predicates used as ground truth.

Deliberately naive and unmetered: these define correctness for the
acceptance suite, not space behaviour.  Size caps keep enumeration sane.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import networkx as nx

from .core import ContractViolation, ReadOnlyGraph, SetFamilyView

MAX_ORACLE_N = 14
MAX_ORACLE_UNIVERSE = 24


@dataclass(frozen=True)
class TargetPredicate:
    name: str
    checker: Callable[[ReadOnlyGraph], bool]

    def __call__(self, g: ReadOnlyGraph) -> bool:
        return self.checker(g)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise ContractViolation(f"{what} exceeds oracle size cap ({n} > {cap})")


def induced_subgraph(g: ReadOnlyGraph, keep: set[int] | frozenset[int]) -> ReadOnlyGraph:
    """Relabelled induced subgraph on ``keep`` (ascending original order)."""
    verts = sorted(keep)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return ReadOnlyGraph(len(verts), edges, directed=g.directed)


def delete_vertices(g: ReadOnlyGraph, removed) -> ReadOnlyGraph:
    return induced_subgraph(g, set(range(g.n)) - set(removed))


# ---------------------------------------------------------------------------
# hitting set


def brute_hitting_set(family: SetFamilyView, k: int) -> tuple[bool, int | None]:
    """Exact decision by subset enumeration over elements present in sets.

    Returns ``(answer, minimum size)``; the minimum is None for NO.
    """
    _check_cap(family.n, MAX_ORACLE_UNIVERSE, "universe")
    sets = family.sets
    if not sets:
        return True, 0
    present = sorted({e for s in sets for e in s})
    for size in range(0, min(k, len(present)) + 1):
        for cand in combinations(present, size):
            chosen = set(cand)
            if all(any(e in chosen for e in s) for s in sets):
                return True, size
    return False, None


# ---------------------------------------------------------------------------
# graph deletion


def brute_deletion(g: ReadOnlyGraph, k: int, target: TargetPredicate) -> bool:
    """True iff some S, |S| <= k, leaves a graph satisfying ``target``."""
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    for size in range(0, min(k, g.n) + 1):
        for cand in combinations(range(g.n), size):
            if target(delete_vertices(g, cand)):
                return True
    return False


def brute_fvs(g: ReadOnlyGraph, k: int) -> tuple[bool, tuple[int, ...] | None]:
    """Exact FVS decision plus the lexicographically least minimum witness."""
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    for size in range(0, min(k, g.n) + 1):
        for cand in combinations(range(g.n), size):
            if _is_forest(delete_vertices(g, cand)):
                return True, cand
    return False, None


# ---------------------------------------------------------------------------
# predicates


def _components(g: ReadOnlyGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _edge_count_within(g: ReadOnlyGraph, verts: list[int]) -> int:
    vs = set(verts)
    return sum(1 for u, v in g.edges() if u in vs and v in vs)


def _is_forest(g: ReadOnlyGraph) -> bool:
    return all(
        _edge_count_within(g, comp) == len(comp) - 1 for comp in _components(g)
    )


def _is_linear_forest(g: ReadOnlyGraph) -> bool:
    return _is_forest(g) and all(g.degree(v) <= 2 for v in range(g.n))


def _is_cluster(g: ReadOnlyGraph) -> bool:
    # no induced P3: every component is a clique
    for comp in _components(g):
        c = len(comp)
        if _edge_count_within(g, comp) != c * (c - 1) // 2:
            return False
    return True


def _is_split(g: ReadOnlyGraph) -> bool:
    # Hammer-Simeone degree criterion (splittance zero)
    d = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    big = [i for i in range(len(d)) if d[i] >= i]
    m_idx = max(big) + 1 if big else 0
    lhs = sum(d[:m_idx])
    rhs = m_idx * (m_idx - 1) + sum(d[m_idx:])
    return lhs == rhs


def _is_threshold(g: ReadOnlyGraph) -> bool:
    # repeatedly strip a dominating or isolated vertex
    alive = set(range(g.n))
    while alive:
        iso = next((v for v in sorted(alive) if all(w not in alive for w in g.neighbors(v))), None)
        if iso is not None:
            alive.discard(iso)
            continue
        dom = next(
            (
                v
                for v in sorted(alive)
                if sum(1 for w in g.neighbors(v) if w in alive) == len(alive) - 1
            ),
            None,
        )
        if dom is None:
            return False
        alive.discard(dom)
    return True


def _is_bipartite(g: ReadOnlyGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _is_chordal(g: ReadOnlyGraph) -> bool:
    # maximum cardinality search, then verify the elimination order
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    n = g.n
    weight = [0] * n
    order: list[int] = []
    in_order = [False] * n
    for _ in range(n):
        v = max((x for x in range(n) if not in_order[x]), key=lambda x: (weight[x], -x))
        order.append(v)
        in_order[v] = True
        for w in g.neighbors(v):
            if not in_order[w]:
                weight[w] += 1
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        pivot = min(later, key=lambda w: pos[w])
        for w in later:
            if w != pivot and not g.adjacent(pivot, w):
                return False
    return True


def _is_planar(g: ReadOnlyGraph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(nxg)
    return ok


def _is_caterpillar_forest(g: ReadOnlyGraph) -> bool:
    # pathwidth <= 1: forest whose degree->=2 vertices induce a path per tree
    if not _is_forest(g):
        return False
    for comp in _components(g):
        spine = [v for v in comp if sum(1 for w in g.neighbors(v) if w in set(comp)) >= 2]
        if not spine:
            continue
        sset = set(spine)
        degs = []
        for v in spine:
            d = sum(1 for w in g.neighbors(v) if w in sset)
            degs.append(d)
            if d > 2:
                return False
        # connected (it is a subtree) with max degree 2 and |edges| = |spine|-1 => path
        if sum(degs) != 2 * (len(spine) - 1):
            return False
    return True


def _is_acyclic_tournament(g: ReadOnlyGraph) -> bool:
    if not g.directed:
        raise ContractViolation("acyclicity test expects a directed graph")
    indeg = [0] * g.n
    for u, v in g.edges():
        indeg[v] += 1
    ready = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in g.neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == g.n


def longest_path_vertices(g: ReadOnlyGraph) -> int:
    """Maximum number of vertices on a simple path (subset DP)."""
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    if g.n == 0:
        return 0
    best = 1
    # reach[mask][v]: a path covering mask ending at v exists
    reach: dict[int, int] = {}
    for v in range(g.n):
        reach[1 << v] = 1 << v
    masks = sorted(reach.keys())
    idx = 0
    while idx < len(masks):
        mask = masks[idx]
        idx += 1
        ends = reach[mask]
        size = mask.bit_count()
        if size > best:
            best = size
        for v in range(g.n):
            if not (ends >> v) & 1:
                continue
            for w in g.neighbors(v):
                bit = 1 << w
                if mask & bit:
                    continue
                nm = mask | bit
                if nm not in reach:
                    reach[nm] = 0
                    masks.append(nm)
                reach[nm] |= bit
    return best


def longest_cycle_vertices(g: ReadOnlyGraph) -> int:
    """Maximum number of vertices on a simple cycle, 0 if acyclic."""
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    best = 0
    # paths anchored at their minimum vertex; close back to the anchor
    reach: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        reach[(v, 1 << v)] = 1 << v
    keys = sorted(reach.keys())
    idx = 0
    while idx < len(keys):
        anchor, mask = keys[idx]
        idx += 1
        ends = reach[(anchor, mask)]
        for v in range(g.n):
            if not (ends >> v) & 1:
                continue
            if mask.bit_count() >= 3 and v != anchor and g.adjacent(v, anchor):
                best = max(best, mask.bit_count())
            for w in g.neighbors(v):
                if w <= anchor:
                    continue
                bit = 1 << w
                if mask & bit:
                    continue
                key = (anchor, mask | bit)
                if key not in reach:
                    reach[key] = 0
                    keys.append(key)
                reach[key] |= bit
    return best


def is_q_colorable(g: ReadOnlyGraph, q: int) -> bool:
    _check_cap(g.n, MAX_ORACLE_N, "graph")
    if q <= 0:
        return g.n == 0
    color = [-1] * g.n

    def go(v: int) -> bool:
        if v == g.n:
            return True
        used = {color[w] for w in g.neighbors(v) if w < v}
        for c in range(q):
            if c not in used:
                color[v] = c
                if go(v + 1):
                    return True
        color[v] = -1
        return False

    return go(0)


is_forest = TargetPredicate("forest", _is_forest)
is_linear_forest = TargetPredicate("linear-forest", _is_linear_forest)
is_cluster = TargetPredicate("cluster", _is_cluster)
is_split = TargetPredicate("split", _is_split)
is_threshold = TargetPredicate("threshold", _is_threshold)
is_bipartite = TargetPredicate("bipartite", _is_bipartite)
is_chordal = TargetPredicate("chordal", _is_chordal)
is_planar = TargetPredicate("planar", _is_planar)
is_caterpillar_forest = TargetPredicate("caterpillar-forest", _is_caterpillar_forest)
is_acyclic_tournament = TargetPredicate("acyclic-tournament", _is_acyclic_tournament)


def has_path_at_least(b: int) -> TargetPredicate:
    return TargetPredicate(f"path>={b}", lambda g: longest_path_vertices(g) >= b)


def has_cycle_at_least(b: int) -> TargetPredicate:
    return TargetPredicate(f"cycle>={b}", lambda g: longest_cycle_vertices(g) >= b)


def q_colorable(q: int) -> TargetPredicate:
    return TargetPredicate(f"{q}-colorable", lambda g: is_q_colorable(g, q))


PREDICATES = {
    p.name: p
    for p in (
        is_forest,
        is_linear_forest,
        is_cluster,
        is_split,
        is_threshold,
        is_bipartite,
        is_chordal,
        is_planar,
        is_caterpillar_forest,
    )
}
