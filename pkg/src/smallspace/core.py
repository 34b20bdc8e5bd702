"""Restricted-workspace computation model.

Inputs are read-only and randomly accessible, output goes to a write-only
token sink, and every word of auxiliary state an algorithm uses is charged
to a :class:`SpaceMeter`.  A word is 64 bits; charging is cooperative via
:meth:`SpaceMeter.alloc`.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

WORD_BITS = 64


class ContractViolation(Exception):
    """A documented precondition was broken by the caller."""


class ParseError(Exception):
    """Malformed instance text."""


class BudgetExceeded(Exception):
    """Internal signal: an allocation would cross the active word budget."""


# ---------------------------------------------------------------------------
# space accounting


class SpaceMeter:
    """Counts auxiliary memory in 64-bit words.

    Only explicitly charged state counts; the read-only input and the
    write-only output stream are free.  ``peak_words`` is monotone during a
    run and all charges must be released by the end of it.
    """

    __slots__ = ("current_words", "peak_words", "word_limit")

    def __init__(self, word_limit: int | None = None):
        self.current_words = 0
        self.peak_words = 0
        self.word_limit = word_limit

    def alloc(self, words: int) -> "Allocation":
        if words < 1:
            raise ContractViolation("allocation must be at least one word")
        new = self.current_words + words
        if self.word_limit is not None and new > self.word_limit:
            raise BudgetExceeded(f"{new} words exceed budget of {self.word_limit}")
        self.current_words = new
        if new > self.peak_words:
            self.peak_words = new
        return Allocation(self, words)

    def frame(self, words: int) -> "Allocation":
        """Charge a recursion frame; identical to :meth:`alloc`."""
        return self.alloc(words)


class Allocation:
    """Handle for a charged block; releasing it balances the meter."""

    __slots__ = ("_meter", "_words", "_live")

    def __init__(self, meter: SpaceMeter, words: int):
        self._meter = meter
        self._words = words
        self._live = True

    def release(self) -> None:
        if self._live:
            self._meter.current_words -= self._words
            self._live = False

    def __enter__(self) -> "Allocation":
        return self

    def __exit__(self, *exc) -> None:
        self.release()


def alloc(meter: SpaceMeter, words: int) -> Allocation:
    """Module-level convenience wrapper around :meth:`SpaceMeter.alloc`."""
    return meter.alloc(words)


# ---------------------------------------------------------------------------
# verdicts


class VerdictKind(Enum):
    YES = "YES"
    NO = "NO"
    KERNEL = "KERNEL"
    EXCEEDED = "EXCEEDED"
    PARAM_INVALID = "PARAM-INVALID"


@dataclass(frozen=True)
class Verdict:
    """Result of a metered run.

    ``witness`` is present only for YES verdicts whose algorithm promises
    one; kernel payloads live on the sink, never here.
    """

    kind: VerdictKind
    witness: tuple[int, ...] | None = None

    @staticmethod
    def yes(witness: Iterable[int] | None = None) -> "Verdict":
        w = None if witness is None else tuple(witness)
        return Verdict(VerdictKind.YES, w)

    @staticmethod
    def no() -> "Verdict":
        return Verdict(VerdictKind.NO)

    @staticmethod
    def kernel() -> "Verdict":
        return Verdict(VerdictKind.KERNEL)

    @staticmethod
    def exceeded() -> "Verdict":
        return Verdict(VerdictKind.EXCEEDED)

    @staticmethod
    def param_invalid() -> "Verdict":
        return Verdict(VerdictKind.PARAM_INVALID)

    @property
    def is_yes(self) -> bool:
        return self.kind is VerdictKind.YES

    @property
    def is_no(self) -> bool:
        return self.kind is VerdictKind.NO


# ---------------------------------------------------------------------------
# write-only output


class KernelSink:
    """Write-only token stream receiving kernel output.

    Tokens, in emission order, are plain tuples so two sinks compare
    byte-identically via ``repr``.  Token kinds:

    ``("forced", e)``       element/vertex forced into every solution
    ``("param", name, v)``  residual numeric parameter, e.g. the budget
    ``("vertex", v)``       surviving vertex (original id)
    ``("edge", u, v)``      surviving edge
    ``("set", elems)``      surviving hypergraph set (ascending tuple)
    ``("verdict", s)``      canonical constant-size YES/NO kernel
    ``("copy", instance)``  verbatim pass-through of the input instance
    """

    __slots__ = ("tokens",)

    def __init__(self):
        self.tokens: list[tuple] = []

    def emit(self, *token) -> None:
        self.tokens.append(tuple(token))

    def forced(self, element: int) -> None:
        self.emit("forced", element)

    def param(self, name: str, value: int) -> None:
        self.emit("param", name, value)

    def vertex(self, v: int) -> None:
        self.emit("vertex", v)

    def edge(self, u: int, v: int) -> None:
        self.emit("edge", u, v)

    def set_(self, elements: Sequence[int]) -> None:
        self.emit("set", tuple(elements))

    def verdict(self, kind: str) -> None:
        if kind not in ("YES", "NO"):
            raise ContractViolation("canonical kernels are YES or NO")
        self.emit("verdict", kind)

    def copy_instance(self, instance) -> None:
        self.emit("copy", instance)

    # Convenience accessors used by tests and the CLI; reading back a sink
    # is outside the machine model and never happens inside a metered run.
    def forced_elements(self) -> list[int]:
        return [t[1] for t in self.tokens if t[0] == "forced"]

    def params(self) -> dict[str, int]:
        return {t[1]: t[2] for t in self.tokens if t[0] == "param"}

    def vertices(self) -> list[int]:
        return [t[1] for t in self.tokens if t[0] == "vertex"]

    def edges(self) -> list[tuple[int, int]]:
        return [(t[1], t[2]) for t in self.tokens if t[0] == "edge"]

    def sets(self) -> list[tuple[int, ...]]:
        return [t[1] for t in self.tokens if t[0] == "set"]

    def canonical_verdict(self) -> str | None:
        for t in self.tokens:
            if t[0] == "verdict":
                return t[1]
        return None


# ---------------------------------------------------------------------------
# read-only inputs


class ReadOnlyGraph:
    """Immutable simple graph with random-access sorted adjacency.

    Vertex ids are ``0..n-1``.  Undirected graphs keep symmetric adjacency;
    directed graphs store out-neighbours (used only for tournaments).
    Self-loops and duplicate edges are rejected at load time.
    """

    __slots__ = ("n", "directed", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], directed: bool = False):
        if n < 0:
            raise ContractViolation("vertex count must be non-negative")
        self.n = n
        self.directed = directed
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ContractViolation(f"self-loop at {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise ContractViolation(f"duplicate edge ({u},{v})")
            seen.add(key)
            m += 1
            if directed:
                adj[u].append(v)
            else:
                adj[u].append(v)
                adj[v].append(u)
        self._adj = tuple(tuple(sorted(x)) for x in adj)
        self._m = m

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacent(self, u: int, v: int) -> bool:
        row = self._adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges, each once: ``u < v`` for undirected, arcs as stored."""
        for u in range(self.n):
            for v in self._adj[u]:
                if self.directed or u < v:
                    yield (u, v)

    def is_tournament(self) -> bool:
        if not self.directed:
            return False
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adjacent(u, v) == self.adjacent(v, u):
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReadOnlyGraph)
            and self.n == other.n
            and self.directed == other.directed
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self.directed, self._adj))

    def __repr__(self):
        kind = "digraph" if self.directed else "graph"
        return f"ReadOnlyGraph({kind} n={self.n} m={self._m})"


class SetFamilyView:
    """Immutable hypergraph instance: a universe size and an ordered family.

    Family order is input order and is the canonical iteration order.
    Duplicate sets are legal; every set is non-empty with strictly
    increasing elements.
    """

    __slots__ = ("n", "sets")

    def __init__(self, n: int, sets: Iterable[Sequence[int]]):
        if n < 0:
            raise ContractViolation("universe size must be non-negative")
        self.n = n
        out = []
        for s in sets:
            t = tuple(s)
            if not t:
                raise ContractViolation("empty set in family")
            for a, b in zip(t, t[1:]):
                if a >= b:
                    raise ContractViolation(f"set {t} not strictly increasing")
            if t[0] < 0 or t[-1] >= n:
                raise ContractViolation(f"set {t} out of universe 0..{n - 1}")
            out.append(t)
        self.sets = tuple(out)

    @property
    def m(self) -> int:
        return len(self.sets)

    def max_pairwise_intersection(self) -> int:
        best = 0
        for i in range(len(self.sets)):
            si = set(self.sets[i])
            for j in range(i + 1, len(self.sets)):
                c = sum(1 for e in self.sets[j] if e in si)
                if c > best:
                    best = c
        return best

    def check_uniform(self, d: int) -> None:
        for s in self.sets:
            if len(s) != d:
                raise ContractViolation(f"set {s} has size {len(s)}, expected {d}")

    def check_intersection(self, s_bound: int) -> None:
        if self.max_pairwise_intersection() > s_bound:
            raise ContractViolation(f"pairwise intersection exceeds {s_bound}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFamilyView)
            and self.n == other.n
            and self.sets == other.sets
        )

    def __hash__(self):
        return hash((self.n, self.sets))

    def __repr__(self):
        return f"SetFamilyView(n={self.n} m={len(self.sets)})"


# ---------------------------------------------------------------------------
# budget-capped execution (the para-L kernelization wrapper)


@dataclass(frozen=True)
class Budget:
    word_limit: int

    def __post_init__(self):
        if self.word_limit < 1:
            raise ContractViolation("budget must allow at least one word")


def run_with_budget(algorithm: Callable[[SpaceMeter], Verdict], budget: Budget) -> Verdict:
    """Run a metered procedure, aborting it if it crosses the word budget.

    EXCEEDED is a verdict, not an error: the procedure's allocations are
    unwound and the meter balances either way.
    """
    meter = SpaceMeter(word_limit=budget.word_limit)
    try:
        verdict = algorithm(meter)
    except BudgetExceeded:
        return Verdict.exceeded()
    if meter.current_words != 0:
        raise ContractViolation("meter unbalanced after run")
    return verdict


def budget_for_instance(n: int, c: int) -> Budget:
    """Word budget worth ``(c+1) * log2(n)`` bits for an ``n``-sized input."""
    bits = (c + 1) * math.log2(max(2, n))
    return Budget(max(1, math.ceil(bits / WORD_BITS)))


def kernelize_via_budget(
    decider: Callable[[SpaceMeter], Verdict],
    instance,
    c: int,
    sink: KernelSink,
) -> Verdict:
    """Turn a space-bounded decider into a kernelization.

    If the decider finishes within ``(c+1) log2 n`` bits, a canonical
    constant-size YES/NO kernel is written; if it would use more, it is
    aborted and the input instance is copied to the sink verbatim (in which
    case the input itself is the kernel, since n < 2^f(k)).
    """
    budget = budget_for_instance(instance.n, c)
    verdict = run_with_budget(decider, budget)
    if verdict.kind is VerdictKind.EXCEEDED:
        sink.copy_instance(instance)
    elif verdict.kind is VerdictKind.YES:
        sink.verdict("YES")
    elif verdict.kind is VerdictKind.NO:
        sink.verdict("NO")
    else:
        raise ContractViolation("budgeted decider must answer YES or NO")
    return verdict
