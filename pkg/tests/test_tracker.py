import math

import numpy as np
import pytest

from deconn.graph import load
from deconn.oracles import canonical_labels, oracle_components
from deconn.tracker import ComponentTracker, TrackerError


def items(g):
    return [(e, *g.endpoints(e)) for e in range(g.m)]


def test_init_components():
    t = ComponentTracker(4, [])
    assert t.component_count() == 4
    path = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(path))
    assert t.component_count() == 1
    two = load(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    t = ComponentTracker(6, items(two))
    assert sorted(t.component_size(c) for c in t.component_ids()) == [3, 3]


def test_insert_requires_connected_endpoints():
    g = load(3, [(0, 1), (1, 2)])
    t = ComponentTracker(3, items(g))
    t.insert(10, 0, 2)  # chord, endpoints connected
    assert t.component_count() == 1
    t2 = ComponentTracker(4, [(0, 0, 1)])
    with pytest.raises(TrackerError):
        t2.insert(1, 2, 3)


def test_insert_parallel_edge_ok():
    t = ComponentTracker(2, [(0, 0, 1)])
    t.insert(1, 0, 1)
    t.delete(0)
    assert t.component_count() == 1  # parallel edge keeps them connected


def test_path_delete_forces_smaller_side():
    g = load(3, [(0, 1), (1, 2)])
    t = ComponentTracker(3, items(g))
    ev = t.delete(1)
    assert ev is not None
    assert ev.vertices == (2,)
    assert t.component_id(2) == ev.new_id
    assert t.component_vertices(ev.j) == [0, 1]


def test_triangle_delete_has_replacement():
    g = load(3, [(0, 1), (1, 2), (0, 2)])
    t = ComponentTracker(3, items(g))
    assert t.delete(0) is None
    assert t.component_count() == 1


def test_tie_break_avoids_lowest_vertex():
    # deleting the middle edge of 0-1 | 2-3 leaves equal sides; the moved
    # side must be the one without vertex 0
    g = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(g))
    ev = t.delete(1)
    assert ev.vertices == (2, 3)


def test_stale_component_id_raises():
    t = ComponentTracker(3, [])
    with pytest.raises(TrackerError):
        t.component_size(17)


def test_split_bookkeeping_example():
    g = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(g))
    ev = t.delete(2)
    assert ev.vertices == (3,)
    assert t.component_vertices(ev.j) == [0, 1, 2]
    assert t.component_size(ev.new_id) == 1
    assert t.component_vertices(ev.new_id) == [3]


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_full_deletion_matches_dfs_every_step(seed):
    rng = np.random.default_rng(seed)
    n = 50
    edges = []
    for _ in range(int(0.1 * n * (n - 1) / 2)):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        edges.append((u, v))
    g = load(n, edges)
    t = ComponentTracker(n, items(g), seed=seed)
    for e in rng.permutation(g.m):
        e = int(e)
        g.delete(e)
        t.delete(e)
        assert np.array_equal(canonical_labels(t.q), oracle_components(g))
    bound = n * (1 + math.ceil(math.log2(n)))
    assert t.split_mass <= bound


def test_ids_monotone_and_never_reused():
    g = load(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    t = ComponentTracker(6, items(g))
    seen = set(t.component_ids())
    for e in range(4):
        ev = t.delete(e)
        if ev is not None:
            assert ev.new_id not in seen
            seen.add(ev.new_id)
    assert t.component_count() == 6


def test_interleaved_inserts_and_deletes_against_oracle():
    rng = np.random.default_rng(7)
    n = 24
    base = []
    for _ in range(70):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        base.append((u, v))
    g = load(n, base)
    t = ComponentTracker(n, items(g), seed=7)
    alive = set(range(g.m))
    next_id = g.m
    pairs = list(base)
    for _ in range(150):
        if alive and rng.random() < 0.6:
            e = int(rng.choice(sorted(alive)))
            alive.discard(e)
            g.delete(e)
            t.delete(e)
        else:
            # insert an edge inside a current component (contract allows it)
            v = int(rng.integers(n))
            comp = t.component_vertices(t.component_id(v))
            if len(comp) < 2:
                continue
            u, w = rng.choice(comp, size=2, replace=False)
            if u == w:
                continue
            t.insert(next_id, int(u), int(w))
            next_id += 1
        # oracle over alive base edges plus inserted tracker extras
        extra = [(eid, uv) for eid, uv in t.edge_items() if eid >= g.m]
        gg = load(n, [g.endpoints(e) for e in sorted(alive)] +
                  [uv for _, uv in sorted(extra)])
        assert np.array_equal(canonical_labels(t.q), oracle_components(gg))
