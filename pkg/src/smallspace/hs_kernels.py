"""Log-space hitting-set kernelizers.

Buss rule for Vertex Cover, the uniform-d kernel, and the bounded
pairwise-intersection kernels for s = 1 and general s.  The general-s
path runs on a stream cascade: Stream 0 is the input family and Stream i
is the family after rewrite rule i, reconstructed by recursive descent
instead of being stored.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .core import (
    ContractViolation,
    KernelSink,
    ReadOnlyGraph,
    SetFamilyView,
    SpaceMeter,
    Verdict,
)


@dataclass(frozen=True)
class HSInstance:
    """Hitting-set instance with optional structural guarantees.

    ``d`` asserts every set has exactly d elements; ``s`` asserts pairwise
    intersections of at most s.  Both are validated on construction.
    """

    family: SetFamilyView
    k: int
    s: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ContractViolation("budget k must be non-negative")
        if self.d is not None:
            self.family.check_uniform(self.d)
        if self.s is not None:
            self.family.check_intersection(self.s)


def _contains_sorted(haystack: Sequence[int], needle: int) -> bool:
    i = bisect_left(haystack, needle)
    return i < len(haystack) and haystack[i] == needle


def _is_subset_sorted(small: Sequence[int], big: Sequence[int]) -> bool:
    i = 0
    for e in small:
        i = bisect_left(big, e, i)
        if i >= len(big) or big[i] != e:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# Buss rule for Vertex Cover


def buss_vc_kernelize(g: ReadOnlyGraph, k: int, meter: SpaceMeter, sink: KernelSink) -> Verdict:
    """Either NO, or stream a kernel graph with at most 2k^2 vertices.

    Vertices of degree > k are forced into every size-<=k cover and
    reported first; the residual graph keeps the non-isolated survivors
    with their original ids and the reduced budget k'.
    """
    if g.directed:
        raise ContractViolation("Buss kernel expects an undirected graph")
    with meter.alloc(4):
        forced = 0
        for v in range(g.n):
            if g.degree(v) > k:
                forced += 1
        if forced > k:
            return Verdict.no()
        k2 = k - forced
        surviving_edges = 0
        for u, v in g.edges():
            if g.degree(u) <= k and g.degree(v) <= k:
                surviving_edges += 1
        if surviving_edges > k * k2:
            return Verdict.no()
        for v in range(g.n):
            if g.degree(v) > k:
                sink.forced(v)
        sink.param("k", k2)
        emitted = forced
        for v in range(g.n):
            if g.degree(v) <= k and any(g.degree(w) <= k for w in g.neighbors(v)):
                sink.vertex(v)
                emitted += 1
        if emitted > 2 * k * k:
            raise AssertionError(f"Buss kernel size {emitted} exceeds 2k^2={2 * k * k}")
        for u, v in g.edges():
            if g.degree(u) <= k and g.degree(v) <= k:
                sink.edge(u, v)
    return Verdict.kernel()


# ---------------------------------------------------------------------------
# s = 1: linear hypergraphs, exact counter scheme


def hs1_kernelize(inst: HSInstance, meter: SpaceMeter, sink: KernelSink) -> Verdict:
    """Bounded-intersection kernel for s = 1.

    Rule 1 forces elements occurring in >= k+1 sets, rule 2 rejects more
    than k'^2 surviving sets, rule 3 keeps of each set its repeated
    elements plus the first unique one.  Frequencies are recomputed on
    demand with two counters; nothing is materialized.
    """
    fam, k = inst.family, inst.k
    if inst.s is not None and inst.s != 1:
        raise ContractViolation("hs1_kernelize expects s = 1")
    fam.check_intersection(1)
    if fam.m == 0:
        sink.verdict("YES")
        return Verdict.kernel()
    if k == 0:
        return Verdict.no()

    def freq(e: int) -> int:
        return sum(1 for s in fam.sets if _contains_sorted(s, e))

    def survives(idx: int) -> bool:
        return all(freq(e) < k + 1 for e in fam.sets[idx])

    def freq_surviving(e: int) -> int:
        return sum(
            1
            for i, s in enumerate(fam.sets)
            if _contains_sorted(s, e) and survives(i)
        )

    with meter.alloc(4):
        forced = 0
        for e in range(fam.n):
            if freq(e) >= k + 1:
                forced += 1
                if forced > k:
                    return Verdict.no()
        k2 = k - forced
        # a k2-sized hitter meets at most k2 * k <= k^2 surviving sets, each
        # surviving element occurring at most k times in the whole family
        survivors = 0
        for i in range(fam.m):
            if survives(i):
                survivors += 1
        if survivors > k * k:
            return Verdict.no()
        for e in range(fam.n):
            if freq(e) >= k + 1:
                sink.forced(e)
        sink.param("k", k2)
        out_sets = 0
        for i, s in enumerate(fam.sets):
            if not survives(i):
                continue
            out: list[int] = []
            unique_taken = False
            for e in s:
                if freq_surviving(e) >= 2:
                    out.append(e)
                elif not unique_taken:
                    out.append(e)
                    unique_taken = True
            sink.set_(out)
            out_sets += 1
            if len(out) > k * k:
                raise AssertionError(f"hs1 kernel set of {len(out)} elements exceeds k^2")
        if out_sets > k * k:
            raise AssertionError(f"hs1 kernel has {out_sets} sets, exceeds k^2={k * k}")
    return Verdict.kernel()


# ---------------------------------------------------------------------------
# the stream cascade shared by the general-s and uniform-d kernels


class _StreamEngine:
    """Levelled rewrite cascade over a family of sets.

    Level i (1-based) replaces, with threshold ``theta(i)``, every
    collection of more than theta(i) sets sharing a common
    ``sigma(i)``-element subset by that subset.  ``iter_raw`` yields a
    level with survivor multiplicity preserved and replacement subsets in
    lexicographic order, each once; ``iter_canonical`` additionally
    suppresses duplicate survivors, first occurrence winning.

    ``memo=True`` materializes levels for speed (identical sequences);
    ``memo=False`` is the constant-cursor re-enumeration form whose space
    follows the per-level recurrence.
    """

    def __init__(
        self,
        stream0: Callable[[], Iterator[tuple[int, ...]]],
        schedule: Sequence[tuple[int, int]],
        memo: bool,
    ):
        self.stream0 = stream0
        self.schedule = tuple(schedule)
        self.memo = memo
        self._cache: dict[int, tuple[tuple[int, ...], ...]] = {}

    @property
    def top(self) -> int:
        return len(self.schedule)

    def _level_params(self, level: int) -> tuple[int, int]:
        return self.schedule[level - 1]

    # -- raw iteration -----------------------------------------------------

    def iter_raw(self, level: int) -> Iterator[tuple[int, ...]]:
        if level == 0:
            yield from self.stream0()
            return
        if self.memo:
            yield from self._materialize(level)
            return
        sigma, theta = self._level_params(level)
        for x in self.iter_raw(level - 1):
            if not self._has_overfrequent_subset(x, level):
                yield x
        yield from self._iter_replacements(level)

    def _has_overfrequent_subset(self, x: tuple[int, ...], level: int) -> bool:
        sigma, theta = self._level_params(level)
        if len(x) < sigma:
            return False
        for y in combinations(x, sigma):
            if self.count_subset(y, level - 1) > theta:
                return True
        return False

    def _iter_replacements(self, level: int) -> Iterator[tuple[int, ...]]:
        # lexicographic selection over witnessing sets: no materialization,
        # duplicates suppressed by the strictly-increasing cursor
        sigma, theta = self._level_params(level)
        last: tuple[int, ...] | None = None
        while True:
            best: tuple[int, ...] | None = None
            for x in self.iter_raw(level - 1):
                if len(x) < sigma:
                    continue
                for y in combinations(x, sigma):
                    if last is not None and y <= last:
                        continue
                    if best is not None and y >= best:
                        continue
                    if self.count_subset(y, level - 1) > theta:
                        best = y
            if best is None:
                return
            yield best
            last = best

    def count_subset(self, y: Sequence[int], level: int) -> int:
        return sum(1 for x in self.iter_raw(level) if _is_subset_sorted(y, x))

    def count_element(self, e: int, level: int) -> int:
        return sum(1 for x in self.iter_raw(level) if _contains_sorted(x, e))

    # -- canonical (deduplicated) iteration --------------------------------

    def iter_canonical(self, level: int) -> Iterator[tuple[int, ...]]:
        if self.memo:
            seen: set[tuple[int, ...]] = set()
            for x in self.iter_raw(level):
                if x not in seen:
                    seen.add(x)
                    yield x
            return
        idx = 0
        for x in self.iter_raw(level):
            emitted_before = False
            for j, earlier in enumerate(self.iter_raw(level)):
                if j >= idx:
                    break
                if earlier == x:
                    emitted_before = True
                    break
            idx += 1
            if not emitted_before:
                yield x

    def membership(self, x: tuple[int, ...], level: int) -> bool:
        """The two-condition appendix test, by recursive descent."""
        if level == 0:
            return any(s == x for s in self.stream0())
        sigma, theta = self._level_params(level)
        if len(x) == sigma and self.count_subset(x, level - 1) > theta:
            return True
        return self.membership(x, level - 1) and not self._has_overfrequent_subset(x, level)

    # -- memoized fast path --------------------------------------------------

    def _materialize(self, level: int) -> tuple[tuple[int, ...], ...]:
        if level == 0:
            return tuple(self.stream0())
        if level in self._cache:
            return self._cache[level]
        prev = self._materialize(level - 1) if level > 1 else tuple(self.stream0())
        sigma, theta = self._level_params(level)
        counts: Counter = Counter()
        for x in prev:
            if len(x) >= sigma:
                for y in combinations(x, sigma):
                    counts[y] += 1
        over = {y for y, c in counts.items() if c > theta}
        out: list[tuple[int, ...]] = []
        for x in prev:
            if len(x) < sigma or not any(y in over for y in combinations(x, sigma)):
                out.append(x)
        out.extend(sorted(over))
        result = tuple(out)
        self._cache[level] = result
        return result


# ---------------------------------------------------------------------------
# general s >= 2


def _hss_schedule(s: int, k: int) -> list[tuple[int, int]]:
    return [(s + 1 - i, k**i) for i in range(1, s)]


def hss_kernelize(
    inst: HSInstance, meter: SpaceMeter, sink: KernelSink, *, streaming: bool = False
) -> Verdict:
    """Bounded-intersection kernel for s >= 2.

    Rules 1..s-1 are the subset-replacement cascade, rule s forces
    high-frequency elements, rule s+1 rejects oversized families, and
    rule s+2 prunes single-occurrence elements.  ``streaming=True`` keeps
    the pure re-enumeration form used by the space scans; the default
    memoizes levels, producing the identical token stream faster.
    """
    fam, k, s = inst.family, inst.k, inst.s
    if s is None or s < 2:
        raise ContractViolation("hss_kernelize expects s >= 2")
    fam.check_intersection(s)
    if fam.m == 0:
        sink.verdict("YES")
        return Verdict.kernel()
    if k == 0:
        return Verdict.no()

    engine = _StreamEngine(lambda: iter(fam.sets), _hss_schedule(s, k), memo=not streaming)
    top = engine.top  # stream s-1

    with meter.alloc(6):
        # rule s: forced elements, threshold on the original budget
        forced: list[int] = []
        forced_alloc = meter.alloc(max(1, k))
        limit = k**s
        for e in range(fam.n):
            if not any(_contains_sorted(x, e) for x in fam.sets):
                continue
            if engine.count_element(e, top) > limit:
                forced.append(e)
                if len(forced) > k:
                    forced_alloc.release()
                    return Verdict.no()
        k2 = k - len(forced)

        def hit_by_forced(x: tuple[int, ...]) -> bool:
            return any(_contains_sorted(x, e) for e in forced)

        # rule s+1: strict threshold; surviving elements occur at most k^s
        # times, so a k2-sized hitter meets at most k2 * k^s <= k^(s+1) sets
        remaining = sum(1 for x in engine.iter_raw(top) if not hit_by_forced(x))
        if remaining > k ** (s + 1):
            forced_alloc.release()
            return Verdict.no()

        for e in forced:
            sink.forced(e)
        sink.param("k", k2)

        def freq_stream_s(e: int) -> int:
            return sum(
                1
                for x in engine.iter_raw(top)
                if not hit_by_forced(x) and _contains_sorted(x, e)
            )

        out_sets = 0
        for x in engine.iter_canonical(top):
            if hit_by_forced(x):
                continue
            out: list[int] = []
            unique_taken = False
            for e in x:
                if freq_stream_s(e) >= 2:
                    out.append(e)
                elif not unique_taken:
                    out.append(e)
                    unique_taken = True
            sink.set_(out)
            out_sets += 1
            if len(out) > s * k ** (s + 1):
                raise AssertionError("hss kernel set exceeds s*k^(s+1) elements")
        if out_sets > k ** (s + 1):
            raise AssertionError("hss kernel exceeds k^(s+1) sets")
        forced_alloc.release()
    return Verdict.kernel()


# ---------------------------------------------------------------------------
# uniform d (layered over-frequency rule)


def _dhs_schedule(d: int, k: int) -> list[tuple[int, int]]:
    # level 1 deduplicates; level i replaces (d+1-i)-subsets occurring in
    # more than (k+1)^(i-1) sets, largest subsets first
    return [(d + 1 - i, (k + 1) ** (i - 1)) for i in range(1, d + 1)]


def dhs_engine(
    stream0: Callable[[], Iterator[tuple[int, ...]]], d: int, k: int
) -> _StreamEngine:
    """Cascade for families of sets of size at most d (memoized)."""
    return _StreamEngine(stream0, _dhs_schedule(d, k), memo=True)


def dhs_kernelize(inst: HSInstance, meter: SpaceMeter, sink: KernelSink) -> Verdict:
    """Kernel for uniform set size d: at most (k+1)^d sets over d(k+1)^d elements."""
    fam, k, d = inst.family, inst.k, inst.d
    if d is None or d < 1:
        raise ContractViolation("dhs_kernelize expects uniform set size d")
    fam.check_uniform(d)
    if fam.m == 0:
        sink.verdict("YES")
        return Verdict.kernel()
    if k == 0:
        return Verdict.no()
    engine = dhs_engine(lambda: iter(fam.sets), d, k)
    with meter.alloc(4):
        bound = (k + 1) ** d
        count = sum(1 for _ in engine.iter_raw(engine.top))
        if count > bound:
            return Verdict.no()
        sink.param("k", k)
        universe: set[int] = set()
        emitted = 0
        for x in engine.iter_canonical(engine.top):
            sink.set_(x)
            emitted += 1
            universe.update(x)
        if emitted > bound:
            raise AssertionError("dhs kernel exceeds (k+1)^d sets")
        if len(universe) > d * bound:
            raise AssertionError("dhs kernel exceeds d(k+1)^d elements")
    return Verdict.kernel()


# ---------------------------------------------------------------------------
# stream levels as a public surface (general-s semantics)


@dataclass(frozen=True)
class StreamLevel:
    """Level i of the rewrite cascade backing an s-bounded instance."""

    instance: HSInstance
    i: int

    def __post_init__(self):
        s = self.instance.s
        if s is None or s < 1:
            raise ContractViolation("stream levels require an s-bounded instance")
        if not (0 <= self.i <= s + 2):
            raise ContractViolation(f"stream level {self.i} out of range 0..{s + 2}")


def _level_engine(inst: HSInstance, streaming: bool = False) -> _StreamEngine:
    return _StreamEngine(
        lambda: iter(inst.family.sets),
        _hss_schedule(inst.s, inst.k) if inst.s >= 2 else [],
        memo=not streaming,
    )


def _forced_elements(inst: HSInstance, engine: _StreamEngine) -> list[int]:
    s, k = inst.s, inst.k
    limit = k**s
    out = []
    for e in range(inst.family.n):
        if any(_contains_sorted(x, e) for x in inst.family.sets):
            if engine.count_element(e, engine.top) > limit:
                out.append(e)
    return out


def stream_contains(level: StreamLevel, x: Sequence[int]) -> bool:
    """Membership of ``x`` in Stream i, evaluated by recursive descent."""
    inst, i = level.instance, level.i
    s = inst.s
    if not (1 <= i <= s + 1):
        raise ContractViolation("stream_contains serves levels 1..s+1")
    xt = tuple(x)
    engine = _level_engine(inst)
    if i <= s - 1:
        return engine.membership(xt, i)
    if not engine.membership(xt, engine.top):
        return False
    limit = inst.k**s
    return all(engine.count_element(e, engine.top) <= limit for e in xt)


def enumerate_stream(level: StreamLevel, visitor: Callable[[tuple[int, ...]], None]) -> None:
    """Visit Stream i in canonical order: survivors first (first occurrence
    wins), then replacement subsets lexicographically."""
    inst, i = level.instance, level.i
    s, k = inst.s, inst.k
    engine = _level_engine(inst)
    if i <= s - 1:
        for x in engine.iter_canonical(i):
            visitor(x)
        return
    forced = set(_forced_elements(inst, engine))

    def unforced(x: tuple[int, ...]) -> bool:
        return not any(e in forced for e in x)

    if i in (s, s + 1):
        for x in engine.iter_canonical(engine.top):
            if unforced(x):
                visitor(x)
        return
    # i == s + 2: the output stage

    def freq(e: int) -> int:
        return sum(
            1 for x in engine.iter_raw(engine.top) if unforced(x) and _contains_sorted(x, e)
        )

    for x in engine.iter_canonical(engine.top):
        if not unforced(x):
            continue
        out: list[int] = []
        unique_taken = False
        for e in x:
            if freq(e) >= 2:
                out.append(e)
            elif not unique_taken:
                out.append(e)
                unique_taken = True
        visitor(tuple(out))
