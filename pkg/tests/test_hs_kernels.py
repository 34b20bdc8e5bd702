import pytest

from smallspace.core import (
    ContractViolation,
    KernelSink,
    ReadOnlyGraph,
    SetFamilyView,
    SpaceMeter,
    VerdictKind,
)
from smallspace.formats import sink_to_family
from smallspace.generators import (
    gen_cycle,
    gen_random_family,
    gen_random_linear_hypergraph,
)
from smallspace.hs_kernels import (
    HSInstance,
    StreamLevel,
    buss_vc_kernelize,
    dhs_kernelize,
    enumerate_stream,
    hs1_kernelize,
    hss_kernelize,
    stream_contains,
)
from smallspace.oracle import brute_hitting_set
from conftest import star


def run_kernelizer(fn, inst):
    meter = SpaceMeter()
    sink = KernelSink()
    verdict = fn(inst, meter, sink)
    assert meter.current_words == 0
    return verdict, sink


def kernel_equivalent(fam, k, verdict, sink):
    """Original answer == kernel answer, accounting for forced elements."""
    want, _ = brute_hitting_set(fam, k)
    if verdict.kind is VerdictKind.NO:
        return want is False
    if sink.canonical_verdict() == "YES":
        return want is True
    if sink.canonical_verdict() == "NO":
        return want is False
    k2 = sink.params().get("k", k)
    got, _ = brute_hitting_set(SetFamilyView(fam.n, sink.sets()), k2)
    return got == want


# ---------------------------------------------------------------------------
# Buss


def test_buss_triangle_no():
    m, s = SpaceMeter(), KernelSink()
    assert buss_vc_kernelize(gen_cycle(3), 1, m, s).kind is VerdictKind.NO


def test_buss_star_forces_center():
    m, s = SpaceMeter(), KernelSink()
    v = buss_vc_kernelize(star(3), 1, m, s)
    assert v.kind is VerdictKind.KERNEL
    assert s.forced_elements() == [0]
    assert s.vertices() == [] and s.edges() == []
    assert s.params()["k"] == 0


def test_buss_edgeless_yes():
    m, s = SpaceMeter(), KernelSink()
    v = buss_vc_kernelize(ReadOnlyGraph(4, []), 0, m, s)
    assert v.kind is VerdictKind.KERNEL
    assert s.vertices() == [] and s.forced_elements() == []


def test_buss_kernel_vertices_cover_original():
    # the forced plus surviving vertices always cover every input edge
    import random

    rng = random.Random(4)
    from smallspace.generators import gen_random_graph

    for seed in range(60):
        n = rng.randint(2, 12)
        g = gen_random_graph(n, 0.35, seed)
        k = rng.randint(0, 4)
        m, s = SpaceMeter(), KernelSink()
        v = buss_vc_kernelize(g, k, m, s)
        if v.kind is VerdictKind.NO:
            continue
        cover = set(s.forced_elements()) | set(s.vertices())
        assert len(cover) <= 2 * k * k
        for u, w in g.edges():
            assert u in cover or w in cover


# ---------------------------------------------------------------------------
# s = 1


def test_hs1_forced_element():
    fam = SetFamilyView(5, [(1, 2), (1, 3), (1, 4)])
    v, s = run_kernelizer(hs1_kernelize, HSInstance(fam, 1, s=1))
    assert v.kind is VerdictKind.KERNEL
    assert s.forced_elements() == [1]
    assert s.sets() == []
    assert kernel_equivalent(fam, 1, v, s)


def test_hs1_too_many_sets_no():
    fam = SetFamilyView(5, [(1, 2), (3, 4)])
    v, _ = run_kernelizer(hs1_kernelize, HSInstance(fam, 1, s=1))
    assert v.kind is VerdictKind.NO


def test_hs1_rule3_keeps_first_unique():
    fam = SetFamilyView(4, [(1, 2, 3)])
    v, s = run_kernelizer(hs1_kernelize, HSInstance(fam, 1, s=1))
    assert s.sets() == [(1,)]
    assert kernel_equivalent(fam, 1, v, s)


def test_hs1_k0_cases():
    v, s = run_kernelizer(hs1_kernelize, HSInstance(SetFamilyView(3, []), 0, s=1))
    assert s.canonical_verdict() == "YES"
    v, _ = run_kernelizer(hs1_kernelize, HSInstance(SetFamilyView(3, [(0,)]), 0, s=1))
    assert v.kind is VerdictKind.NO


def test_hs1_rejects_intersection_violation():
    fam = SetFamilyView(4, [(0, 1, 2), (0, 1, 3)])
    with pytest.raises(ContractViolation):
        HSInstance(fam, 1, s=1)


# ---------------------------------------------------------------------------
# general s


def test_hss_pair_replacement():
    fam = SetFamilyView(6, [(1, 2, 3), (1, 2, 4)])
    inst = HSInstance(fam, 1, s=2)
    out = []
    enumerate_stream(StreamLevel(inst, 1), out.append)
    assert out == [(1, 2)]
    v, s = run_kernelizer(hss_kernelize, inst)
    assert kernel_equivalent(fam, 1, v, s)


def test_hss_empty_family_yes():
    v, s = run_kernelizer(hss_kernelize, HSInstance(SetFamilyView(3, []), 0, s=2))
    assert s.canonical_verdict() == "YES"


def test_hss_three_disjoint_sets_no():
    fam = SetFamilyView(9, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    v, _ = run_kernelizer(hss_kernelize, HSInstance(fam, 1, s=2))
    assert v.kind is VerdictKind.NO


def test_hss_streaming_matches_memoized():
    for seed in range(20):
        fam = gen_random_family(10, 6, (2, 4), 2, seed)
        inst = HSInstance(fam, 2, s=2)
        m1, s1 = SpaceMeter(), KernelSink()
        v1 = hss_kernelize(inst, m1, s1)
        m2, s2 = SpaceMeter(), KernelSink()
        v2 = hss_kernelize(inst, m2, s2, streaming=True)
        assert v1.kind == v2.kind
        assert s1.tokens == s2.tokens


# ---------------------------------------------------------------------------
# stream levels


def _stream(inst, i):
    out = []
    enumerate_stream(StreamLevel(inst, i), out.append)
    return out


def test_stream0_is_input_order():
    fam = SetFamilyView(8, [(5, 6), (0, 1), (2, 3)])
    inst = HSInstance(fam, 1, s=2)
    assert _stream(inst, 0) == list(fam.sets)


def test_stream1_survivors_then_replacements():
    fam = SetFamilyView(8, [(1, 2, 3), (5, 6, 7), (1, 2, 4)])
    inst = HSInstance(fam, 1, s=2)
    assert _stream(inst, 1) == [(5, 6, 7), (1, 2)]


def test_stream_empty_family():
    inst = HSInstance(SetFamilyView(4, []), 2, s=2)
    for i in range(0, 5):
        assert _stream(inst, i) == []


def test_stream_contains_conditions():
    fam = SetFamilyView(8, [(1, 2, 3), (5, 6, 7), (1, 2, 4)])
    inst = HSInstance(fam, 1, s=2)
    lvl = StreamLevel(inst, 1)
    assert stream_contains(lvl, (1, 2))
    assert stream_contains(lvl, (5, 6, 7))
    assert not stream_contains(lvl, (1, 2, 3))
    assert not stream_contains(lvl, (0, 5))


def test_stream_contains_level_range():
    inst = HSInstance(SetFamilyView(4, [(0, 1)]), 1, s=2)
    with pytest.raises(ContractViolation):
        StreamLevel(inst, 9)
    with pytest.raises(ContractViolation):
        stream_contains(StreamLevel(inst, 0), (0, 1))


def test_stream_duplicate_sets_counted_with_multiplicity():
    # two copies of a pair push it over the k^1 threshold at level one
    fam = SetFamilyView(6, [(1, 2), (1, 2), (3, 4)])
    inst = HSInstance(fam, 1, s=2)
    assert _stream(inst, 1) == [(3, 4), (1, 2)]
    assert stream_contains(StreamLevel(inst, 1), (1, 2))


# ---------------------------------------------------------------------------
# uniform d


def test_dhs_star_pairs():
    fam = SetFamilyView(5, [(1, 2), (1, 3), (1, 4)])
    v, s = run_kernelizer(dhs_kernelize, HSInstance(fam, 1, d=2))
    assert kernel_equivalent(fam, 1, v, s)


def test_dhs_empty_family():
    v, s = run_kernelizer(dhs_kernelize, HSInstance(SetFamilyView(2, []), 3, d=2))
    assert s.canonical_verdict() == "YES"


def test_dhs_disjoint_pairs_kernel_is_no():
    fam = SetFamilyView(6, [(0, 1), (2, 3), (4, 5)])
    v, s = run_kernelizer(dhs_kernelize, HSInstance(fam, 2, d=2))
    assert kernel_equivalent(fam, 2, v, s)


def test_dhs_rejects_nonuniform():
    with pytest.raises(ContractViolation):
        HSInstance(SetFamilyView(4, [(0, 1), (2,)]), 1, d=2)


# ---------------------------------------------------------------------------
# randomized equivalence and size bounds


@pytest.mark.parametrize("s_bound", [1, 2, 3])
def test_bounded_intersection_equivalence(s_bound):
    for seed in range(120):
        fam = gen_random_family(10, 5, (1, 4), s_bound, seed)
        for k in (0, 1, 2, 3):
            inst = HSInstance(fam, k, s=s_bound)
            fn = hs1_kernelize if s_bound == 1 else hss_kernelize
            v, s = run_kernelizer(fn, inst)
            assert kernel_equivalent(fam, k, v, s), (seed, k)


@pytest.mark.parametrize("d", [2, 3])
def test_uniform_equivalence(d):
    for seed in range(120):
        fam = gen_random_family(10, 6, (d, d), None, seed)
        for k in (0, 1, 2, 3):
            v, s = run_kernelizer(dhs_kernelize, HSInstance(fam, k, d=d))
            assert kernel_equivalent(fam, k, v, s), (seed, k)


def test_hs1_output_preserves_intersection_bound():
    for seed in range(40):
        fam = gen_random_linear_hypergraph(14, 6, 3, seed)
        for k in (2, 3):
            v, s = run_kernelizer(hs1_kernelize, HSInstance(fam, k, s=1))
            if v.kind is VerdictKind.KERNEL and s.sets():
                out = SetFamilyView(fam.n, s.sets())
                assert out.max_pairwise_intersection() <= 1


def test_hss_output_preserves_intersection_bound():
    for seed in range(40):
        fam = gen_random_family(10, 5, (2, 4), 2, seed)
        v, s = run_kernelizer(hss_kernelize, HSInstance(fam, 2, s=2))
        if v.kind is VerdictKind.KERNEL and s.sets():
            out = SetFamilyView(fam.n, s.sets())
            assert out.max_pairwise_intersection() <= 2


def test_space_scaling_hs1():
    peaks = []
    for n in (256, 512, 1024, 2048):
        fam = gen_random_linear_hypergraph(n, 9, 3, 5)
        m, s = SpaceMeter(), KernelSink()
        hs1_kernelize(HSInstance(fam, 3, s=1), m, s)
        peaks.append(m.peak_words)
    assert all(b - a <= 8 for a, b in zip(peaks, peaks[1:]))
