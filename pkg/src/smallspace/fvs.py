"""Feedback vertex set in small space.

Three layers: a pluggable s-t connectivity backend standing in for
deterministic log-space connectivity; an implicit view of the multigraph
left by the degree-2 rule (queried by chain walking, never materialized);
and the two solvers, plain (3k)^k branching and iterative compression.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .core import ContractViolation, ReadOnlyGraph, SpaceMeter, Verdict
from .deletion import RunStats


# ---------------------------------------------------------------------------
# connectivity backends


class OracleConnectivity:
    """Search-based backend: exact, unmetered, default for correctness."""

    name = "oracle"

    def connected(
        self,
        g: ReadOnlyGraph,
        alive: Callable[[int], bool],
        u: int,
        v: int,
        meter: SpaceMeter | None = None,
    ) -> bool:
        if not (alive(u) and alive(v)):
            raise ContractViolation("connectivity endpoints must be alive")
        if u == v:
            return True
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for w in g.neighbors(x):
                if w == v:
                    return True
                if alive(w) and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def connected_small(self, adj: dict[int, list[int]], u: int, v: int) -> bool:
        if u == v:
            return True
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w == v:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False


class RandomWalkConnectivity:
    """Randomized backend: O(1) metered words, walk length 8*a^3 over the
    a-vertex queried subgraph, one-sided error (may miss a connection)."""

    name = "randomwalk"

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)

    def connected(
        self,
        g: ReadOnlyGraph,
        alive: Callable[[int], bool],
        u: int,
        v: int,
        meter: SpaceMeter | None = None,
    ) -> bool:
        if not (alive(u) and alive(v)):
            raise ContractViolation("connectivity endpoints must be alive")
        if u == v:
            return True
        handle = meter.alloc(3) if meter is not None else None
        try:
            a = sum(1 for x in range(g.n) if alive(x))
            steps = 8 * a * a * a
            cur = u
            for _ in range(steps):
                nbrs = [w for w in g.neighbors(cur) if alive(w)]
                if not nbrs:
                    return False
                cur = self.rng.choice(nbrs)
                if cur == v:
                    return True
            return False
        finally:
            if handle is not None:
                handle.release()

    def connected_small(self, adj: dict[int, list[int]], u: int, v: int) -> bool:
        if u == v:
            return True
        a = len(adj)
        steps = 8 * a * a * a
        cur = u
        for _ in range(steps):
            nbrs = adj[cur]
            if not nbrs:
                return False
            cur = self.rng.choice(nbrs)
            if cur == v:
                return True
        return False


def make_backend(name: str, seed: int = 0):
    if name == "oracle":
        return OracleConnectivity()
    if name == "randomwalk":
        return RandomWalkConnectivity(seed)
    raise ContractViolation(f"unknown connectivity backend {name!r}")


def connected(
    g: ReadOnlyGraph,
    alive: Callable[[int], bool],
    u: int,
    v: int,
    meter: SpaceMeter | None = None,
    backend=None,
) -> bool:
    """s-t connectivity in the induced alive subgraph."""
    return (backend or OracleConnectivity()).connected(g, alive, u, v, meter)


# ---------------------------------------------------------------------------
# the canonical reduced multigraph, explicit form (test reference)


class ExplicitReduced:
    """Materialized fixpoint of prune / cap / contract on a multigraph.

    Rule priority: delete a lowest-id non-terminal of degree <= 1; cap any
    multiplicity above two; contract the highest-id loop-free non-terminal
    of degree exactly two (so a pure cycle survives at its lowest id).
    """

    def __init__(self, g: ReadOnlyGraph, deleted: Sequence[int] = (), terminals: Sequence[int] = ()):
        self.terminals = set(terminals)
        dele = set(deleted)
        self.mult: dict[int, dict[int, int]] = {
            v: {} for v in range(g.n) if v not in dele
        }
        self.loops: dict[int, int] = {v: 0 for v in self.mult}
        for u, v in g.edges():
            if u in dele or v in dele:
                continue
            self.mult[u][v] = self.mult[u].get(v, 0) + 1
            self.mult[v][u] = self.mult[v].get(u, 0) + 1
        self._fixpoint()

    def _degree(self, v: int) -> int:
        return sum(self.mult[v].values()) + 2 * self.loops[v]

    def _drop(self, v: int) -> None:
        for w in list(self.mult[v]):
            del self.mult[w][v]
        del self.mult[v]
        del self.loops[v]

    def _fixpoint(self) -> None:
        while True:
            v = next(
                (
                    x
                    for x in sorted(self.mult)
                    if x not in self.terminals and self.loops[x] == 0 and self._degree(x) <= 1
                ),
                None,
            )
            if v is not None:
                self._drop(v)
                continue
            capped = False
            for x in sorted(self.mult):
                for y in sorted(self.mult[x]):
                    if self.mult[x][y] > 2:
                        self.mult[x][y] = 2
                        self.mult[y][x] = 2
                        capped = True
            if capped:
                continue
            v = next(
                (
                    x
                    for x in sorted(self.mult, reverse=True)
                    if x not in self.terminals and self.loops[x] == 0 and self._degree(x) == 2
                ),
                None,
            )
            if v is None:
                return
            ends = [w for w in sorted(self.mult[v]) for _ in range(self.mult[v][w])]
            self._drop(v)
            y, z = ends
            if y == z:
                self.loops[y] += 1
            else:
                self.mult[y][z] = self.mult[y].get(z, 0) + 1
                self.mult[z][y] = self.mult[z].get(y, 0) + 1

    def survivors(self) -> list[int]:
        return sorted(self.mult)

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(u, {}).get(v, 0)

    def self_loops(self, v: int) -> int:
        return self.loops.get(v, 0)

    def degree(self, v: int) -> int:
        return self._degree(v) if v in self.mult else 0


# ---------------------------------------------------------------------------
# the implicit view


class ReducedView:
    """Implicit access to the reduced multigraph of ``base - deleted``.

    The only stored state is the deleted list, the terminal pins and a
    peeling bitset (charged at one word per 64 vertices); adjacency,
    degrees and self-loops are recovered per query by walking degree-2
    chains with two cursors.
    """

    def __init__(
        self,
        base: ReadOnlyGraph,
        deleted: Sequence[int] = (),
        terminals: Sequence[int] = (),
        meter: SpaceMeter | None = None,
    ):
        if base.directed:
            raise ContractViolation("reduction is defined on undirected graphs")
        self.base = base
        self.deleted = frozenset(deleted)
        self.terminals = frozenset(terminals)
        self._alloc = None
        if meter is not None:
            words = max(1, (base.n + 63) // 64 + len(self.deleted) + 4)
            self._alloc = meter.alloc(words)
        self._pruned = self._peel()

    def release(self) -> None:
        if self._alloc is not None:
            self._alloc.release()
            self._alloc = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.release()

    # -- peeling -----------------------------------------------------------

    def _peel(self) -> set[int]:
        pruned: set[int] = set()
        alive = [v for v in range(self.base.n) if v not in self.deleted]

        def deg(v: int) -> int:
            return sum(
                1
                for w in self.base.neighbors(v)
                if w not in self.deleted and w not in pruned
            )

        changed = True
        while changed:
            changed = False
            for v in alive:
                if v in pruned or v in self.terminals:
                    continue
                if deg(v) <= 1:
                    pruned.add(v)
                    changed = True
        return pruned

    def alive(self, v: int) -> bool:
        return v not in self.deleted and v not in self._pruned

    def _sdeg(self, v: int) -> int:
        return sum(1 for w in self.base.neighbors(v) if self.alive(w))

    def _chain_next(self, prev: int, cur: int) -> int:
        nbrs = [w for w in self.base.neighbors(cur) if self.alive(w) and w != prev]
        return nbrs[0]

    def _is_m1_node(self, v: int) -> bool:
        if not self.alive(v):
            return False
        if v in self.terminals or self._sdeg(v) >= 3:
            return True
        # pure cycle: all degree two, no pinned or branching vertex; its
        # lowest id survives the highest-first contraction order
        if self._sdeg(v) != 2:
            return False
        lo = v
        prev, cur = v, self._first_nbr(v)
        # walk one direction; a return to v means a pure cycle
        while True:
            if cur == v:
                return v == lo
            if cur in self.terminals or self._sdeg(cur) >= 3:
                return False
            lo = min(lo, cur)
            prev, cur = cur, self._chain_next(prev, cur)

    def _first_nbr(self, v: int) -> int:
        return next(w for w in self.base.neighbors(v) if self.alive(w))

    def _arrivals(self, v: int) -> list[int]:
        """Chain-walk every pruned-graph edge at v to its reduced endpoint."""
        out = []
        for x in self.base.neighbors(v):
            if not self.alive(x):
                continue
            prev, cur = v, x
            while not (cur == v or cur in self.terminals or self._sdeg(cur) >= 3):
                prev, cur = cur, self._chain_next(prev, cur)
            out.append(cur)
        return out

    def _m1_profile(self, v: int) -> tuple[dict[int, int], int]:
        """(multiplicities to other first-stage nodes, self-loop count)."""
        mult: dict[int, int] = {}
        selfs = 0
        for a in self._arrivals(v):
            if a == v:
                selfs += 1
            else:
                mult[a] = mult.get(a, 0) + 1
        return mult, selfs // 2

    def _collapses(self, v: int) -> tuple[bool, int | None]:
        """Whether capping leaves v with a double edge to a single node,
        which the contraction then folds into a self-loop there."""
        if v in self.terminals or not self._is_m1_node(v):
            return False, None
        mult, loops = self._m1_profile(v)
        if loops or len(mult) != 1:
            return False, None
        (w, c), = mult.items()
        if c < 3:
            return False, None
        # mutual theta pair: the lower id survives
        wm, wl = self._m1_profile(w)
        if w not in self.terminals and not wl and len(wm) == 1 and wm.get(v, 0) >= 3:
            return (v > w), w
        return True, w

    def is_survivor(self, v: int) -> bool:
        if not self._is_m1_node(v):
            return False
        gone, _ = self._collapses(v)
        return not gone

    def survivors(self) -> Iterator[int]:
        for v in range(self.base.n):
            if self.is_survivor(v):
                yield v

    def is_empty(self) -> bool:
        return next(self.survivors(), None) is None

    def implicit_adjacent(self, u: int, v: int) -> int:
        """Multiplicity (0, 1 or 2) between two surviving vertices."""
        if u == v:
            raise ContractViolation("use has_self_loop for loops")
        if not (self.is_survivor(u) and self.is_survivor(v)):
            raise ContractViolation("implicit adjacency is defined on survivors")
        mult, _ = self._m1_profile(u)
        return min(2, mult.get(v, 0))

    def has_self_loop(self, v: int) -> bool:
        if not self.alive(v):
            return False
        if not self.is_survivor(v):
            return False
        _, loops = self._m1_profile(v)
        if loops:
            return True
        # loops inherited from collapsing neighbours
        cand = {a for a in self._arrivals(v) if a != v}
        for u in cand:
            gone, tgt = self._collapses(u)
            if gone and tgt == v:
                return True
        return False

    def self_loop_count(self, v: int) -> int:
        if not self.is_survivor(v):
            return 0
        _, loops = self._m1_profile(v)
        for u in {a for a in self._arrivals(v) if a != v}:
            gone, tgt = self._collapses(u)
            if gone and tgt == v:
                loops += 1
        return loops

    def reduced_degree(self, v: int) -> int:
        if v in self.deleted:
            raise ContractViolation("degree query on a deleted vertex")
        if not self.is_survivor(v):
            return 0
        mult, _ = self._m1_profile(v)
        total = 0
        for w, c in mult.items():
            gone, _tgt = self._collapses(w)
            if not gone:
                total += min(2, c)
        return total + 2 * self.self_loop_count(v)


def implicit_adjacent(view: ReducedView, u: int, v: int, meter: SpaceMeter | None = None) -> int:
    handle = meter.alloc(4) if meter is not None else None
    try:
        return view.implicit_adjacent(u, v)
    finally:
        if handle is not None:
            handle.release()


def reduced_degree(view: ReducedView, v: int, meter: SpaceMeter | None = None) -> int:
    handle = meter.alloc(4) if meter is not None else None
    try:
        return view.reduced_degree(v)
    finally:
        if handle is not None:
            handle.release()


def has_self_loop(view: ReducedView, v: int, meter: SpaceMeter | None = None) -> bool:
    handle = meter.alloc(4) if meter is not None else None
    try:
        return view.has_self_loop(v)
    finally:
        if handle is not None:
            handle.release()


def select_ith_largest_degree(view: ReducedView, i: int, meter: SpaceMeter | None = None) -> int:
    """The i-th survivor by descending reduced degree, ties by ascending id,
    found by repeated scans."""
    if i < 1:
        raise ContractViolation("rank is 1-based")
    handle = meter.alloc(6) if meter is not None else None
    try:
        prev: tuple[int, int] | None = None  # (-degree, id) of the last pick
        pick = None
        for _ in range(i):
            pick = None
            for v in view.survivors():
                key = (-view.reduced_degree(v), v)
                if prev is not None and key <= prev:
                    continue
                if pick is None or key < pick:
                    pick = key
            if pick is None:
                raise ContractViolation("rank exceeds survivor count")
            prev = pick
        return pick[1]
    finally:
        if handle is not None:
            handle.release()


# ---------------------------------------------------------------------------
# (3k)^k branching


def fvs_branch_3k(
    g: ReadOnlyGraph, k: int, meter: SpaceMeter, stats: RunStats | None = None
) -> Verdict:
    """Branch over the 3k' highest-degree vertices of the reduced multigraph,
    taking self-loop vertices forcibly first."""
    if g.directed:
        raise ContractViolation("FVS expects an undirected graph")
    stats = stats if stats is not None else RunStats()
    chosen: list[int] = []

    def node(l: int) -> Verdict:
        stats.branch_nodes += 1
        with meter.frame(3):
            taken = 0
            while True:
                with ReducedView(g, chosen, meter=meter) as view:
                    loop_v = next(
                        (v for v in view.survivors() if view.has_self_loop(v)), None
                    )
                    if loop_v is None:
                        if view.is_empty():
                            res = Verdict.yes(sorted(chosen))
                            for _ in range(taken):
                                chosen.pop()
                            return res
                        if l == 0:
                            for _ in range(taken):
                                chosen.pop()
                            return Verdict.no()
                        alive_count = sum(1 for _ in view.survivors())
                        width = min(3 * l, alive_count)
                        picks = [
                            select_ith_largest_degree(view, i, meter)
                            for i in range(1, width + 1)
                        ]
                        break
                chosen.append(loop_v)
                taken += 1
                l -= 1
                if l < 0:
                    for _ in range(taken):
                        chosen.pop()
                    return Verdict.no()
            for v in picks:
                chosen.append(v)
                res = node(l - 1)
                chosen.pop()
                if res.is_yes:
                    for _ in range(taken):
                        chosen.pop()
                    return res
            for _ in range(taken):
                chosen.pop()
            return Verdict.no()

    with meter.alloc(max(1, k + 2)):
        return node(k)


# ---------------------------------------------------------------------------
# iterative compression


@dataclass
class _CompressCtx:
    g: ReadOnlyGraph
    prefix: int
    zset: frozenset[int]
    p0: tuple[int, ...]
    backend: object
    stats: RunStats
    meter: SpaceMeter
    rlist: list[int] = field(default_factory=list)
    moves: list[int] = field(default_factory=list)
    pe: list[tuple[int, int]] = field(default_factory=list)
    cc: set[int] = field(default_factory=set)

    def alive(self, v: int) -> bool:
        return v < self.prefix and v not in self.zset and v not in self._rset

    def __post_init__(self):
        self._rset: set[int] = set()
        self._wset: set[int] = set(self.p0)

    def push_r(self, v: int) -> None:
        self.rlist.append(v)
        self._rset.add(v)

    def pop_r(self) -> None:
        self._rset.discard(self.rlist.pop())

    def push_move(self, v: int) -> None:
        self.moves.append(v)
        self._wset.add(v)

    def pop_move(self) -> None:
        self._wset.discard(self.moves.pop())

    def in_w(self, v: int) -> bool:
        return v in self._wset

    def w_list(self) -> list[int]:
        return sorted(self._wset)

    def f_alive(self, v: int) -> bool:
        return self.alive(v) and v not in self._wset

    def w_nbrs(self, v: int) -> list[int]:
        return [w for w in self.g.neighbors(v) if w in self._wset and self.alive(w)]

    def f_nbrs(self, v: int) -> list[int]:
        return [w for w in self.g.neighbors(v) if self.f_alive(w)]


def _subtree_attached(ctx: _CompressCtx, frm: int, to: int) -> bool:
    """Rotation Euler tour of the forest subtree entered via (frm, to);
    true at the first vertex carrying an edge into the fixed side."""
    prev, cur = frm, to
    while True:
        if ctx.w_nbrs(cur):
            return True
        fl = ctx.f_nbrs(cur)
        i = fl.index(prev)
        nxt = fl[(i + 1) % len(fl)]
        if cur == to and nxt == frm:
            return False
        prev, cur = cur, nxt


def _walk_chain(ctx: _CompressCtx, prev: int, cur: int):
    """Follow the contracted structure starting with the edge (prev, cur).

    ``prev`` is either a fixed-side vertex (attachment resolve) or a
    branching node of the forest side.  Returns one of::

        ("dead",)                      the walked branch prunes away
        ("w", w_end, min_id)           a fixed-to-fixed chain; min_id is its
                                       lowest (canonical deletion) vertex
        ("node", v)                    the next surviving branching vertex
    """
    min_id: int | None = None
    while True:
        wn = ctx.w_nbrs(cur)
        fl = ctx.f_nbrs(cur)
        if not wn and len(fl) == 2 and prev in fl:
            # interior of a chain: step on without liveness checks
            min_id = cur if min_id is None else min(min_id, cur)
            nxt = fl[0] if fl[1] == prev else fl[1]
            prev, cur = cur, nxt
            continue
        back = 0 if ctx.in_w(prev) else 1
        fwd = [x for x in fl if x != prev]
        live = [x for x in fwd if _subtree_attached(ctx, cur, x)]
        vdeg = len(wn) + back + len(live)
        if vdeg <= 1:
            return ("dead",)
        if vdeg >= 3:
            return ("node", cur)
        # vdeg == 2
        if len(live) == 1:
            min_id = cur if min_id is None else min(min_id, cur)
            prev, cur = cur, live[0]
            continue
        # chain terminates into the fixed side
        min_id = cur if min_id is None else min(min_id, cur)
        if back == 1:
            return ("w", wn[0], min_id)
        other = wn[0] if wn[1] == prev else wn[1]
        return ("w", other, min_id)


def _node_profile(ctx: _CompressCtx, v: int):
    """W-side reduced edges (target, chain min or None) and the forest-side
    reduced degree of a branching node."""
    w_edges: list[tuple[int, int | None]] = [(w, None) for w in ctx.w_nbrs(v)]
    f_degree = 0
    for x in ctx.f_nbrs(v):
        res = _walk_chain(ctx, v, x)
        if res[0] == "dead":
            continue
        if res[0] == "w":
            if res[2] in ctx.cc:
                continue
            w_edges.append((res[1], res[2]))
        else:
            f_degree += 1
    return w_edges, f_degree


def _gp_structure(ctx: _CompressCtx) -> tuple[dict[int, int], bool]:
    """Component labels of the fixed side (base edges plus committed
    pseudo-edges) and its acyclicity, via backend connectivity."""
    w = ctx.w_list()
    adj: dict[int, list[int]] = {x: [] for x in w}
    edge_count = 0
    for i, a in enumerate(w):
        for b in w[i + 1 :]:
            if ctx.g.adjacent(a, b):
                adj[a].append(b)
                adj[b].append(a)
                edge_count += 1
    for a, b in ctx.pe:
        adj[a].append(b)
        adj[b].append(a)
        edge_count += 1
    labels: dict[int, int] = {}
    reps: list[int] = []
    for x in w:
        for rep in reps:
            if ctx.backend.connected_small(adj, x, rep):
                labels[x] = labels[rep]
                break
        else:
            labels[x] = len(reps)
            reps.append(x)
    acyclic = edge_count == len(w) - len(reps)
    return labels, acyclic


def _fvs_branch(ctx: _CompressCtx, l: int):
    """One node of the compression branching; returns a witness list of
    forest-side deletions or None.

    Forced moves are applied in a loop so the recursion depth, and with it
    the charged frame stack, stays proportional to the branching measure.
    """
    ctx.stats.branch_nodes += 1
    if l < 0:
        return None
    pushed = 0

    def bail(result):
        for _ in range(pushed):
            ctx.pop_r()
        return result

    with ctx.meter.frame(3):
        while True:
            attach = [
                (w, f)
                for w in ctx.w_list()
                for f in ctx.g.neighbors(w)
                if ctx.f_alive(f)
            ]
            if len(attach) <= 1:
                return bail(list(ctx.rlist))
            comp, acyclic = _gp_structure(ctx)
            if not acyclic:
                return bail(None)
            forced: int | None = None
            branch_key: int | None = None
            branch_action = None
            for w, f in attach:
                res = _walk_chain(ctx, w, f)
                if res[0] == "dead":
                    continue
                if res[0] == "w":
                    w2, min_id = res[1], res[2]
                    if min_id in ctx.cc:
                        continue
                    if comp[w] == comp[w2]:
                        if forced is None or min_id < forced:
                            forced = min_id
                    elif forced is None and (branch_key is None or min_id < branch_key):
                        branch_key = min_id
                        branch_action = ("chain", min_id, w, w2)
                else:
                    u = res[1]
                    w_edges, f_degree = _node_profile(ctx, u)
                    seen_comps: dict[int, int] = {}
                    same = False
                    for tgt, _cm in w_edges:
                        c = comp[tgt]
                        seen_comps[c] = seen_comps.get(c, 0) + 1
                        if seen_comps[c] >= 2:
                            same = True
                    if same:
                        if forced is None or u < forced:
                            forced = u
                    elif (
                        forced is None
                        and f_degree <= 1
                        and len(w_edges) >= 2
                        and (branch_key is None or u < branch_key)
                    ):
                        branch_key = u
                        branch_action = ("node", u, w_edges)
            if forced is not None:
                ctx.push_r(forced)
                pushed += 1
                l -= 1
                ctx.stats.branch_nodes += 1
                if l < 0:
                    return bail(None)
                continue
            if branch_action is None:
                return bail(list(ctx.rlist))
            break
        # delete arm
        ctx.push_r(branch_key)
        res = _fvs_branch(ctx, l - 1)
        ctx.pop_r()
        if res is not None:
            return bail(res)
        # keep arm: commit the structure to the fixed side
        if branch_action[0] == "chain":
            _kind, min_id, wa, wb = branch_action
            ctx.pe.append((wa, wb))
            ctx.cc.add(min_id)
            res = _fvs_branch(ctx, l)
            ctx.cc.discard(min_id)
            ctx.pe.pop()
            return bail(res)
        _kind, u, w_edges = branch_action
        ctx.push_move(u)
        added_pe = 0
        added_cc: list[int] = []
        for tgt, cm in w_edges:
            if cm is not None:
                ctx.pe.append((u, tgt))
                added_pe += 1
                if cm not in ctx.cc:
                    ctx.cc.add(cm)
                    added_cc.append(cm)
        res = _fvs_branch(ctx, l)
        for cm in added_cc:
            ctx.cc.discard(cm)
        for _ in range(added_pe):
            ctx.pe.pop()
        ctx.pop_move()
        return bail(res)


def fvs_compress(
    g: ReadOnlyGraph,
    s: Sequence[int],
    k: int,
    meter: SpaceMeter,
    backend=None,
    stats: RunStats | None = None,
    prefix: int | None = None,
    validate: bool = True,
) -> Verdict:
    """Shrink a feedback vertex set of size at most k+1 to size at most k.

    Subsets Z of the given set are tried in ascending cardinality then
    lexicographic order; each keeps P = S - Z intact and branches on the
    forest side, with degree-2 chains handled as units so the fixed side
    never grows beyond O(k) stored ids.
    """
    if g.directed:
        raise ContractViolation("FVS expects an undirected graph")
    backend = backend or OracleConnectivity()
    stats = stats if stats is not None else RunStats()
    prefix = g.n if prefix is None else prefix
    s = tuple(sorted(set(s)))
    if any(not (0 <= v < prefix) for v in s):
        raise ContractViolation("solution vertices out of range")
    if len(s) > k + 1:
        raise ContractViolation("compression input must have at most k+1 vertices")
    if validate and not _acyclic_outside(g, prefix, set(s)):
        raise ContractViolation("input set is not a feedback vertex set")

    words = 16 * (k + 2) + 16
    with meter.alloc(words):
        for zsize in range(0, min(k, len(s)) + 1):
            for z in combinations(s, zsize):
                ctx = _CompressCtx(
                    g=g,
                    prefix=prefix,
                    zset=frozenset(z),
                    p0=tuple(v for v in s if v not in z),
                    backend=backend,
                    stats=stats,
                    meter=meter,
                )
                _, acyclic = _gp_structure(ctx)
                if not acyclic:
                    continue
                res = _fvs_branch(ctx, k - zsize)
                if res is not None:
                    return Verdict.yes(sorted(set(z) | set(res)))
    return Verdict.no()


def _acyclic_outside(g: ReadOnlyGraph, prefix: int, removed: set[int]) -> bool:
    seen: set[int] = set()
    for root in range(prefix):
        if root in removed or root in seen:
            continue
        stack = [(root, -1)]
        seen.add(root)
        while stack:
            v, par = stack.pop()
            skipped_parent = False
            for w in g.neighbors(v):
                if w >= prefix or w in removed:
                    continue
                if w == par and not skipped_parent:
                    skipped_parent = True
                    continue
                if w in seen:
                    return False
                seen.add(w)
                stack.append((w, v))
    return True


def fvs_iterative(
    g: ReadOnlyGraph,
    k: int,
    meter: SpaceMeter,
    backend=None,
    stats: RunStats | None = None,
) -> Verdict:
    """Iterative compression over vertex prefixes: grow the induced
    subgraph one vertex at a time, recompressing a (k+1)-sized solution."""
    if g.directed:
        raise ContractViolation("FVS expects an undirected graph")
    backend = backend or OracleConnectivity()
    stats = stats if stats is not None else RunStats()
    if g.n == 0:
        return Verdict.yes(())
    with meter.alloc(max(1, k + 2)):
        limit = min(k + 1, g.n)
        res = fvs_compress(
            g, tuple(range(limit)), k, meter, backend, stats, prefix=limit, validate=False
        )
        if res.is_no:
            return Verdict.no()
        t = list(res.witness)
        for nxt in range(limit, g.n):
            s = tuple(sorted(set(t) | {nxt}))
            res = fvs_compress(
                g, s, k, meter, backend, stats, prefix=nxt + 1, validate=False
            )
            if res.is_no:
                return Verdict.no()
            t = list(res.witness)
        return Verdict.yes(tuple(sorted(t)))
