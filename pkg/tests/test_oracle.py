"""Three-example checks for every predicate plus cross-predicate laws."""

import random

import pytest
from hypothesis import given, strategies as st

from smallspace.core import ContractViolation, ReadOnlyGraph, SetFamilyView
from smallspace.generators import gen_cycle, gen_path, gen_random_graph
from smallspace.oracle import (
    brute_deletion,
    brute_fvs,
    brute_hitting_set,
    delete_vertices,
    has_cycle_at_least,
    has_path_at_least,
    is_acyclic_tournament,
    is_bipartite,
    is_caterpillar_forest,
    is_chordal,
    is_cluster,
    is_forest,
    is_linear_forest,
    is_planar,
    is_q_colorable,
    is_split,
    is_threshold,
    longest_cycle_vertices,
    longest_path_vertices,
)
from conftest import complete, petersen, star


def test_brute_hitting_set_examples():
    assert brute_hitting_set(SetFamilyView(4, [(1, 2), (2, 3)]), 1) == (True, 1)
    assert brute_hitting_set(SetFamilyView(1, []), 0) == (True, 0)
    assert brute_hitting_set(SetFamilyView(6, [(0, 1), (2, 3), (4, 5)]), 2)[0] is False


def test_brute_hitting_set_cap():
    with pytest.raises(ContractViolation):
        brute_hitting_set(SetFamilyView(30, [(0, 1)]), 1)


def test_brute_deletion_examples():
    assert brute_deletion(gen_cycle(5), 1, is_bipartite)
    assert not brute_deletion(gen_cycle(3), 0, is_forest)
    assert brute_deletion(gen_path(3), 1, is_cluster)


def test_brute_fvs_examples():
    assert brute_fvs(gen_cycle(4), 1) == (True, (0,))
    assert brute_fvs(gen_path(4), 0) == (True, ())
    assert brute_fvs(petersen(), 2) == (False, None)


def test_is_forest():
    assert is_forest(gen_path(5))
    assert not is_forest(gen_cycle(3))
    assert is_forest(ReadOnlyGraph(4, [(0, 1), (2, 3)]))


def test_is_linear_forest():
    assert is_linear_forest(gen_path(4))
    assert not is_linear_forest(star(3))
    assert not is_linear_forest(gen_cycle(4))


def test_is_cluster():
    assert is_cluster(complete(4))
    assert not is_cluster(gen_path(3))
    assert is_cluster(ReadOnlyGraph(5, [(0, 1), (2, 3), (2, 4), (3, 4)]))


def test_is_split():
    assert is_split(complete(4))
    assert is_split(star(4))
    assert not is_split(ReadOnlyGraph(4, [(0, 1), (2, 3)]))


def test_is_threshold():
    assert is_threshold(star(3))
    assert not is_threshold(gen_path(4))
    assert not is_threshold(gen_cycle(4))


def test_is_bipartite():
    assert is_bipartite(gen_cycle(4))
    assert not is_bipartite(gen_cycle(5))
    assert is_bipartite(ReadOnlyGraph(3, []))


def test_is_chordal():
    assert is_chordal(complete(4))
    assert not is_chordal(gen_cycle(4))
    assert is_chordal(gen_path(5))


def test_is_planar():
    assert is_planar(gen_cycle(5))
    assert not is_planar(complete(5))
    k33 = ReadOnlyGraph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert not is_planar(k33)


def test_is_caterpillar_forest():
    assert is_caterpillar_forest(gen_path(6))
    assert not is_caterpillar_forest(gen_cycle(4))
    spider = ReadOnlyGraph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert not is_caterpillar_forest(spider)


def test_is_acyclic_tournament():
    cyc = ReadOnlyGraph(3, [(0, 1), (1, 2), (2, 0)], directed=True)
    assert not is_acyclic_tournament(cyc)
    trans = ReadOnlyGraph(3, [(0, 1), (0, 2), (1, 2)], directed=True)
    assert is_acyclic_tournament(trans)
    assert is_acyclic_tournament(ReadOnlyGraph(1, [], directed=True))


def test_path_and_cycle_lengths():
    assert longest_path_vertices(gen_path(6)) == 6
    assert longest_path_vertices(star(3)) == 3
    assert longest_cycle_vertices(gen_cycle(5)) == 5
    assert longest_cycle_vertices(gen_path(5)) == 0
    assert longest_cycle_vertices(complete(4)) == 4
    assert has_path_at_least(4)(gen_path(4))
    assert not has_cycle_at_least(4)(gen_cycle(3))


def test_q_colorable():
    assert is_q_colorable(gen_cycle(4), 2)
    assert not is_q_colorable(gen_cycle(5), 2)
    assert is_q_colorable(complete(4), 4)
    assert not is_q_colorable(complete(4), 3)


@given(st.integers(0, 10**6))
def test_linear_forest_implies_forest(seed):
    g = gen_random_graph(7, 0.25, seed)
    if is_linear_forest(g):
        assert is_forest(g)


@given(st.integers(0, 10**6))
def test_caterpillar_implies_forest(seed):
    g = gen_random_graph(7, 0.25, seed)
    if is_caterpillar_forest(g):
        assert is_forest(g)


@given(st.integers(0, 10**6))
def test_threshold_implies_split(seed):
    g = gen_random_graph(6, 0.5, seed)
    if is_threshold(g):
        assert is_split(g)


def test_cluster_on_disjoint_cliques():
    rng = random.Random(9)
    for _ in range(20):
        sizes = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
        edges = []
        off = 0
        for s in sizes:
            edges.extend(
                (off + i, off + j) for i in range(s) for j in range(i + 1, s)
            )
            off += s
        assert is_cluster(ReadOnlyGraph(off, edges))


def test_witness_validity():
    for seed in range(25):
        g = gen_random_graph(8, 0.3, seed)
        ok, wit = brute_fvs(g, 3)
        if ok:
            assert is_forest(delete_vertices(g, wit))
