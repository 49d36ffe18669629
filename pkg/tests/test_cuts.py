import numpy as np
import pytest

from deconn.cuts import cut_oracle_naive, prune_to_c_components, stoer_wagner_min_cut, tarjan_bridges
from deconn.graph import load
from deconn.oracles import (
    canonical_labels,
    oracle_2ec_partition,
    oracle_bridges,
    oracle_bridges_definitional,
    oracle_c_components,
)
from deconn.tracker import ComponentTracker


def items(g):
    return [(e, *g.endpoints(e)) for e in range(g.m)]


def test_cycle_has_no_bridge():
    g = load(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    t = ComponentTracker(4, items(g))
    assert cut_oracle_naive(2, t).find_edge_on_small_cut() is None


def test_path_every_edge_is_a_bridge():
    g = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(g))
    orc = cut_oracle_naive(2, t)
    assert orc.find_edge_on_small_cut() == 0  # lowest id first


def test_c1_oracle_trivial():
    g = load(3, [(0, 1)])
    t = ComponentTracker(3, items(g))
    assert cut_oracle_naive(1, t).find_edge_on_small_cut() is None


def test_k4_is_three_connected():
    g = load(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    t = ComponentTracker(4, items(g))
    assert cut_oracle_naive(3, t).find_edge_on_small_cut() is None
    # enumeration of all bipartitions confirms the min cut of K4 is 3
    best = min(
        sum(1 for e in range(6)
            if (g.endpoints(e)[0] in side) != (g.endpoints(e)[1] in side))
        for mask in range(1, 15)
        if (side := {v for v in range(4) if mask >> v & 1}))
    assert best == 3


def test_bridges_match_both_oracles_random():
    rng = np.random.default_rng(1)
    for trial in range(15):
        n = int(rng.integers(4, 30))
        edges = []
        for _ in range(int(rng.integers(3, 3 * n))):
            u = int(rng.integers(n))
            v = int(rng.integers(n - 1))
            if v >= u:
                v += 1
            edges.append((u, v))
        g = load(n, edges)
        prod = set(tarjan_bridges(n, ((e, g.endpoints(e)) for e in range(g.m))))
        assert prod == oracle_bridges(g)
        if n <= 20:
            assert prod == oracle_bridges_definitional(g)


def test_prune_two_triangles_with_bridge():
    g = load(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    t = ComponentTracker(6, items(g))
    orc = cut_oracle_naive(2, t)
    pruned = prune_to_c_components(orc)
    assert pruned == [6]
    assert sorted(t.component_size(c) for c in t.component_ids()) == [3, 3]


def test_prune_path_to_singletons():
    g = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(g))
    prune_to_c_components(cut_oracle_naive(2, t))
    assert t.component_count() == 4


@pytest.mark.parametrize("seed", range(6))
def test_prune_matches_2ec_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(5, 26))
    edges = []
    for _ in range(int(rng.integers(4, 3 * n))):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        edges.append((u, v))
    g = load(n, edges)
    t = ComponentTracker(n, items(g), seed=seed)
    prune_to_c_components(cut_oracle_naive(2, t))
    assert np.array_equal(canonical_labels(t.q), oracle_2ec_partition(g))


def test_prune_c3_matches_refinement_oracle():
    rng = np.random.default_rng(5)
    for trial in range(5):
        n = 10
        edges = []
        for _ in range(26):
            u = int(rng.integers(n))
            v = int(rng.integers(n - 1))
            if v >= u:
                v += 1
            edges.append((u, v))
        g = load(n, edges)
        t = ComponentTracker(n, items(g), seed=trial)
        prune_to_c_components(cut_oracle_naive(3, t))
        assert np.array_equal(canonical_labels(t.q), oracle_c_components(g, 3))


def test_stoer_wagner_small_cases():
    # triangle: min cut 2
    w = {frozenset((0, 1)): 1, frozenset((1, 2)): 1, frozenset((0, 2)): 1}
    val, side = stoer_wagner_min_cut([0, 1, 2], w)
    assert val == 2 and len(side) in (1, 2)
    # weighted pair
    w2 = {frozenset((0, 1)): 3}
    val2, _ = stoer_wagner_min_cut([0, 1], w2)
    assert val2 == 3
