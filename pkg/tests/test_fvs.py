import random

import pytest

from smallspace.core import ContractViolation, ReadOnlyGraph, SpaceMeter, VerdictKind
from smallspace.deletion import RunStats
from smallspace.fvs import (
    ExplicitReduced,
    ReducedView,
    connected,
    fvs_branch_3k,
    fvs_compress,
    fvs_iterative,
    make_backend,
    select_ith_largest_degree,
)
from smallspace.generators import (
    gen_cycle,
    gen_disjoint_cycles,
    gen_path,
    gen_random_graph,
)
from smallspace.oracle import brute_fvs, delete_vertices, is_forest
from conftest import complete, petersen, star


# ---------------------------------------------------------------------------
# connectivity


def test_connected_path():
    assert connected(gen_path(3), lambda v: True, 0, 2)


def test_connected_disjoint_edges():
    assert not connected(ReadOnlyGraph(4, [(0, 1), (2, 3)]), lambda v: True, 0, 2)


def test_connected_respects_alive_mask():
    assert not connected(gen_cycle(6), lambda v: v % 2 == 0, 0, 2)


def test_randomwalk_backend_is_seeded_and_sound():
    g = gen_cycle(8)
    b = make_backend("randomwalk", 3)
    m = SpaceMeter()
    assert b.connected(g, lambda v: True, 0, 4, m)
    assert m.current_words == 0
    # never reports a connection that does not exist
    b2 = make_backend("randomwalk", 5)
    assert not b2.connected(ReadOnlyGraph(4, [(0, 1), (2, 3)]), lambda v: True, 0, 3)


# ---------------------------------------------------------------------------
# reduced view


def test_implicit_adjacent_contracts_path():
    view = ReducedView(gen_path(3), terminals=(0, 2))
    assert view.implicit_adjacent(0, 2) == 1


def test_implicit_adjacent_double_edge_on_c4():
    view = ReducedView(gen_cycle(4), terminals=(0, 2))
    assert view.implicit_adjacent(0, 2) == 2


def test_isolated_vertices_reduce_away():
    view = ReducedView(ReadOnlyGraph(2, []))
    assert list(view.survivors()) == []


def test_c3_minus_vertex_prunes_entirely():
    view = ReducedView(gen_cycle(3), deleted=(2,))
    assert list(view.survivors()) == []
    assert view.reduced_degree(0) == 0 and view.reduced_degree(1) == 0


def test_k4_is_irreducible():
    view = ReducedView(complete(4))
    assert list(view.survivors()) == [0, 1, 2, 3]
    assert all(view.reduced_degree(v) == 3 for v in range(4))
    assert not any(view.has_self_loop(v) for v in range(4))


def test_balloon_gives_attachment_self_loop():
    g = ReadOnlyGraph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
    view = ReducedView(g)
    assert list(view.survivors()) == [0]
    assert view.has_self_loop(0)


def test_pure_cycle_survives_at_lowest_id():
    view = ReducedView(gen_cycle(5))
    assert list(view.survivors()) == [0]
    assert view.has_self_loop(0)
    assert view.reduced_degree(0) == 2


def test_select_ith_tie_break_on_k4():
    view = ReducedView(complete(4))
    assert [select_ith_largest_degree(view, i) for i in (1, 2, 3, 4)] == [0, 1, 2, 3]
    with pytest.raises(ContractViolation):
        select_ith_largest_degree(view, 5)


def test_select_ith_k4_plus_balloon():
    g = ReadOnlyGraph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)])
    view = ReducedView(g)
    assert view.reduced_degree(0) == 5
    assert select_ith_largest_degree(view, 1) == 0
    assert select_ith_largest_degree(view, 4) == 3


def test_adjacency_query_on_contracted_vertex_rejected():
    view = ReducedView(gen_path(3), terminals=(0, 2))
    with pytest.raises(ContractViolation):
        view.implicit_adjacent(0, 1)


def test_implicit_matches_explicit_on_500_instances():
    bad = 0
    for seed in range(500):
        rng = random.Random(seed)
        n = rng.randint(3, 12)
        g = gen_random_graph(n, rng.uniform(0.15, 0.45), seed * 7 + 1)
        deleted = tuple(sorted(rng.sample(range(n), rng.randint(0, 2))))
        terms = tuple(sorted(set(rng.sample(range(n), rng.randint(0, 2))) - set(deleted)))
        iv = ReducedView(g, deleted, terms)
        ev = ExplicitReduced(g, deleted, terms)
        surv = list(iv.survivors())
        assert surv == ev.survivors(), seed
        for u in surv:
            assert iv.self_loop_count(u) == ev.self_loops(u), (seed, u)
            assert iv.reduced_degree(u) == ev.degree(u), (seed, u)
            for v in surv:
                if v > u:
                    assert iv.implicit_adjacent(u, v) == ev.multiplicity(u, v), (seed, u, v)
    assert bad == 0


# ---------------------------------------------------------------------------
# solvers


def test_branch_3k_examples():
    m = SpaceMeter()
    v = fvs_branch_3k(gen_cycle(3), 1, m)
    assert v.is_yes and len(v.witness) == 1
    assert fvs_branch_3k(gen_disjoint_cycles(6, 2), 1, m).is_no
    v = fvs_branch_3k(gen_path(4), 0, m)
    assert v.is_yes and v.witness == ()
    assert m.current_words == 0


def test_compress_examples():
    m = SpaceMeter()
    v = fvs_compress(gen_cycle(4), (0, 1), 1, m)
    assert v.is_yes and len(v.witness) <= 1
    assert is_forest(delete_vertices(gen_cycle(4), v.witness))
    v = fvs_compress(gen_path(3), (0,), 0, m)
    assert v.is_yes and v.witness == ()
    assert fvs_compress(gen_disjoint_cycles(6, 2), (0, 3), 1, m).is_no
    assert m.current_words == 0


def test_compress_validates_input_set():
    with pytest.raises(ContractViolation):
        fvs_compress(gen_disjoint_cycles(6, 2), (0,), 1, SpaceMeter())
    with pytest.raises(ContractViolation):
        fvs_compress(gen_cycle(4), (0, 1, 2), 1, SpaceMeter())


def test_iterative_examples():
    m = SpaceMeter()
    v = fvs_iterative(gen_cycle(3), 1, m)
    assert v.is_yes and len(v.witness) == 1
    assert fvs_iterative(petersen(), 3, m).is_yes
    assert fvs_iterative(petersen(), 2, m).is_no
    assert m.current_words == 0


def test_iterative_tiny_instances_trivially_yes():
    for n in range(0, 4):
        for seed in range(8):
            g = gen_random_graph(n, 0.7, seed)
            k = max(0, n - 1)
            v = fvs_iterative(g, k, SpaceMeter())
            want, _ = brute_fvs(g, k)
            assert v.is_yes == want


@pytest.mark.parametrize("algo", [fvs_branch_3k, fvs_iterative])
def test_oracle_agreement_random(algo):
    for seed in range(150):
        rng = random.Random(seed)
        n = rng.randint(3, 12)
        g = gen_random_graph(n, rng.uniform(0.1, 0.4), seed + 31)
        k = rng.randint(0, 3)
        m = SpaceMeter()
        v = algo(g, k, m)
        want, _ = brute_fvs(g, k)
        assert v.is_yes == want, (seed, n, k)
        if v.is_yes:
            assert len(v.witness) <= k
            assert is_forest(delete_vertices(g, v.witness))


def test_compress_branch_count_bound():
    for seed in range(120):
        rng = random.Random(seed)
        n = rng.randint(4, 12)
        g = gen_random_graph(n, rng.uniform(0.15, 0.45), seed + 999)
        k = rng.randint(0, 3)
        ok, wit = brute_fvs(g, k + 1)
        if not ok or len(wit) > k + 1:
            continue
        stats = RunStats()
        fvs_compress(g, wit, k, SpaceMeter(), stats=stats)
        assert stats.branch_nodes <= 5 ** (k + 1) * (k + 2), (seed, n, k)


def test_branch_3k_node_count_bound():
    for seed in range(60):
        rng = random.Random(seed)
        n = rng.randint(4, 11)
        g = gen_random_graph(n, rng.uniform(0.15, 0.5), seed + 7)
        k = rng.randint(1, 4)
        stats = RunStats()
        fvs_branch_3k(g, k, SpaceMeter(), stats)
        assert stats.branch_nodes <= max(1, (3 * k) ** k) * 3, (seed, n, k)


def test_iterative_space_bound_and_scaling():
    peaks = []
    for n in (256, 512, 1024, 2048):
        m = SpaceMeter()
        fvs_iterative(gen_cycle(n), 1, m, backend=make_backend("randomwalk", 7))
        peaks.append(m.peak_words)
    assert all(b - a <= 8 for a, b in zip(peaks, peaks[1:]))
    assert all(p <= 24 * 1 + 64 for p in peaks)


def test_randomwalk_run_is_deterministic_per_seed():
    g = gen_random_graph(10, 0.3, 5)

    def run():
        return fvs_iterative(g, 2, SpaceMeter(), backend=make_backend("randomwalk", 42))

    assert run() == run()
