"""Line-oriented instance formats and kernel serialization.

Graphs:    header ``p <n> <m> [directed]``, then m lines ``u v`` (0-indexed).
Families:  header ``h <n> <m>``, then m lines of ascending element ids.

Kernels emitted by the CLI reuse the same two formats so they parse back
through :func:`parse_graph` / :func:`parse_family`; kernel vertices are
compacted to ``0..n'-1`` preserving ascending original-id order.
"""

from __future__ import annotations

from .core import KernelSink, ParseError, ReadOnlyGraph, SetFamilyView


def parse_graph(text: str) -> ReadOnlyGraph:
    lines = text.splitlines()
    header = None
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        if raw.strip():
            header = raw.split()
            break
    if header is None:
        raise ParseError("empty graph input")
    if header[0] != "p" or len(header) not in (3, 4):
        raise ParseError(f"line {lineno}: expected 'p <n> <m> [directed]'")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header fields") from None
    directed = False
    if len(header) == 4:
        if header[3] != "directed":
            raise ParseError(f"line {lineno}: unknown header flag {header[3]!r}")
        directed = True
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    count = 0
    for off, raw in enumerate(lines[lineno:], start=lineno + 1):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"line {off}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {off}: non-integer endpoint") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {off}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {off}: self-loop at {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {off}: duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
        count += 1
    if count != m:
        raise ParseError(f"header announced {m} edges, found {count}")
    return ReadOnlyGraph(n, edges, directed=directed)


def serialize_graph(g: ReadOnlyGraph) -> str:
    head = f"p {g.n} {g.m} directed" if g.directed else f"p {g.n} {g.m}"
    lines = [head]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_family(text: str, check_d: int | None = None, check_s: int | None = None) -> SetFamilyView:
    lines = text.splitlines()
    header = None
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        if raw.strip():
            header = raw.split()
            break
    if header is None:
        raise ParseError("empty family input")
    if header[0] != "h" or len(header) != 3:
        raise ParseError(f"line {lineno}: expected 'h <n> <m>'")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header fields") from None
    sets: list[tuple[int, ...]] = []
    body = lines[lineno:]
    consumed = 0
    for off, raw in enumerate(body, start=lineno + 1):
        if consumed == m:
            if raw.strip():
                raise ParseError(f"line {off}: trailing content after {m} sets")
            continue
        parts = raw.split()
        if not parts:
            raise ParseError(f"line {off}: empty set")
        try:
            elems = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"line {off}: non-integer element") from None
        for a, b in zip(elems, elems[1:]):
            if a >= b:
                raise ParseError(f"line {off}: elements not strictly ascending")
        if elems[0] < 0 or elems[-1] >= n:
            raise ParseError(f"line {off}: element out of range 0..{n - 1}")
        if check_d is not None and len(elems) != check_d:
            raise ParseError(f"line {off}: set size {len(elems)} != d={check_d}")
        sets.append(elems)
        consumed += 1
    if consumed != m:
        raise ParseError(f"header announced {m} sets, found {consumed}")
    fam = SetFamilyView(n, sets)
    if check_s is not None and fam.max_pairwise_intersection() > check_s:
        raise ParseError(f"pairwise intersection bound {check_s} violated")
    return fam


def serialize_family(f: SetFamilyView) -> str:
    lines = [f"h {f.n} {f.m}"]
    lines.extend(" ".join(str(e) for e in s) for s in f.sets)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# kernel extraction from sinks

_CANONICAL_GRAPH = {
    "YES": ReadOnlyGraph(0, []),
    "NO": ReadOnlyGraph(2, [(0, 1)]),
}
_CANONICAL_FAMILY = {
    "YES": SetFamilyView(0, []),
    "NO": SetFamilyView(1, [(0,)]),
}


def sink_to_graph(sink: KernelSink, compact: bool = True) -> tuple[ReadOnlyGraph, dict[int, int]]:
    """Materialize a graph kernel from sink tokens.

    Returns the kernel and the original-id-per-compact-id map.  Canonical
    YES/NO verdicts map to the fixed constant instances; pass-through
    copies are returned as-is.
    """
    cv = sink.canonical_verdict()
    if cv is not None:
        g = _CANONICAL_GRAPH[cv]
        return g, {i: i for i in range(g.n)}
    for t in sink.tokens:
        if t[0] == "copy":
            inst = t[1]
            if not isinstance(inst, ReadOnlyGraph):
                raise ParseError("copied instance is not a graph")
            return inst, {i: i for i in range(inst.n)}
    verts = sorted(set(sink.vertices()) | set(sink.forced_elements()))
    if not compact:
        hi = max(verts, default=-1) + 1
        return ReadOnlyGraph(hi, sink.edges()), {i: i for i in range(hi)}
    index = {orig: i for i, orig in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in sink.edges()]
    return ReadOnlyGraph(len(verts), edges), {i: orig for orig, i in index.items()}


def sink_to_family(sink: KernelSink) -> tuple[SetFamilyView, dict[int, int]]:
    """Materialize a hypergraph kernel (sets only, forced excluded)."""
    cv = sink.canonical_verdict()
    if cv is not None:
        f = _CANONICAL_FAMILY[cv]
        return f, {i: i for i in range(f.n)}
    for t in sink.tokens:
        if t[0] == "copy":
            inst = t[1]
            if not isinstance(inst, SetFamilyView):
                raise ParseError("copied instance is not a family")
            return inst, {i: i for i in range(inst.n)}
    elems = sorted({e for s in sink.sets() for e in s})
    index = {orig: i for i, orig in enumerate(elems)}
    sets = [tuple(index[e] for e in s) for s in sink.sets()]
    return SetFamilyView(len(elems), sets), {i: orig for orig, i in index.items()}
