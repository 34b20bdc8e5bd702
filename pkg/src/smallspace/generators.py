"""Deterministic instance generators feeding tests and the space scans."""

from __future__ import annotations

import random

from .core import ContractViolation, ReadOnlyGraph, SetFamilyView


def gen_cycle(n: int) -> ReadOnlyGraph:
    if n < 3:
        raise ContractViolation("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    return ReadOnlyGraph(n, edges)


def gen_path(n: int) -> ReadOnlyGraph:
    return ReadOnlyGraph(n, [(i, i + 1) for i in range(n - 1)])


def gen_disjoint_cycles(n: int, c: int) -> ReadOnlyGraph:
    """c disjoint cycles on consecutive ids, sizes as balanced as possible."""
    if c < 1 or n < 3 * c:
        raise ContractViolation("disjoint cycles need n >= 3c")
    base, extra = divmod(n, c)
    edges = []
    off = 0
    for i in range(c):
        size = base + (1 if i < extra else 0)
        edges.extend((off + j, off + j + 1) for j in range(size - 1))
        edges.append((off + size - 1, off))
        off += size
    return ReadOnlyGraph(n, edges)


def gen_random_graph(n: int, p: float, seed: int) -> ReadOnlyGraph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return ReadOnlyGraph(n, edges)


def gen_tournament(n: int, seed: int) -> ReadOnlyGraph:
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return ReadOnlyGraph(n, edges, directed=True)


def gen_random_linear_hypergraph(n: int, m: int, setsize: int, seed: int) -> SetFamilyView:
    """m sets of the given size with pairwise intersections <= 1, by rejection."""
    if setsize < 1 or n < setsize:
        raise ContractViolation("set size out of range")
    rng = random.Random(seed)
    sets: list[tuple[int, ...]] = []
    attempts = 0
    while len(sets) < m:
        attempts += 1
        if attempts > 1000 * m + 1000:
            raise ContractViolation("linear hypergraph parameters infeasible")
        cand = tuple(sorted(rng.sample(range(n), setsize)))
        cs = set(cand)
        if all(sum(1 for e in s if e in cs) <= 1 for s in sets):
            sets.append(cand)
    return SetFamilyView(n, sets)


def gen_vc_planted(n: int, t: int, seed: int) -> ReadOnlyGraph:
    """Star forest with t planted centres: every edge meets the cover 0..t-1."""
    if t < 1 or n <= t:
        raise ContractViolation("planted cover needs 1 <= t < n")
    rng = random.Random(seed)
    edges = [(rng.randrange(t), v) for v in range(t, n)]
    return ReadOnlyGraph(n, edges)


def gen_random_family(n: int, m: int, sizes: tuple[int, int], s_bound: int | None, seed: int) -> SetFamilyView:
    """Random family with set sizes in ``sizes``; rejection keeps intersections <= s_bound."""
    rng = random.Random(seed)
    lo, hi = sizes
    sets: list[tuple[int, ...]] = []
    attempts = 0
    while len(sets) < m:
        attempts += 1
        if attempts > 2000 * m + 2000:
            break
        size = rng.randint(lo, min(hi, n))
        cand = tuple(sorted(rng.sample(range(n), size)))
        if s_bound is not None:
            cs = set(cand)
            if any(sum(1 for e in s if e in cs) > s_bound for s in sets):
                continue
        sets.append(cand)
    return SetFamilyView(n, sets)


def generate(kind: str, n: int, params: dict, seed: int):
    """CLI entry point; returns a ReadOnlyGraph or SetFamilyView."""
    if kind == "cycle":
        return gen_cycle(n)
    if kind == "path":
        return gen_path(n)
    if kind == "disjoint-cycles":
        return gen_disjoint_cycles(n, int(params.get("c", 2)))
    if kind == "random-graph":
        return gen_random_graph(n, float(params.get("p", 0.3)), seed)
    if kind == "tournament":
        return gen_tournament(n, seed)
    if kind == "random-linear-hypergraph":
        return gen_random_linear_hypergraph(
            n, int(params.get("m", 10)), int(params.get("setsize", 3)), seed
        )
    if kind == "vc-planted":
        return gen_vc_planted(n, int(params.get("t", 3)), seed)
    raise ContractViolation(f"unknown generator kind {kind!r}")
