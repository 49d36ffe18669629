import numpy as np
import pytest

from deconn.boundaries import ExactBoundary, SmallBoundaryFamily
from deconn.graph import boundary_scan, load
from deconn.tracker import ComponentTracker


def items(g, ids=None):
    ids = range(g.m) if ids is None else ids
    return [(e, *g.endpoints(e)) for e in ids]


def lists_match_scan(bd, g, tracker):
    for cid in tracker.component_ids():
        members = set(tracker.component_vertices(cid))
        want = {e for e in bd.member
                if (int(g.eu[e]) in members) != (int(g.ev[e]) in members)}
        assert bd.list_of(cid) == want, cid


def test_two_triangles_split_isolates_bar():
    # triangles {0,1,2} and {3,4,5}; tracked graph is the path through the bar
    g = load(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    t = ComponentTracker(6, items(g))
    bd = ExactBoundary(t, g.endpoints)
    for e in range(g.m):
        bd.insert(e)
    assert bd.list_of(t.component_id(0)) == set()
    ev = t.delete(6)  # the bar: component splits
    bd.on_split(ev)
    assert bd.list_of(ev.j) == {6}
    assert bd.list_of(ev.new_id) == {6}


def test_split_with_no_external_edges():
    # member edges live elsewhere: the moved side has an empty list
    g = load(4, [(0, 1), (2, 3)])
    t = ComponentTracker(4, items(g, [0]))
    bd = ExactBoundary(t, g.endpoints)
    bd.insert(1)
    ev = t.delete(0)
    bd.on_split(ev)
    assert bd.list_of(ev.new_id) == set()


def test_edge_changes_update_lists_in_place():
    g = load(4, [(0, 1), (1, 2), (2, 3)])
    t = ComponentTracker(4, items(g, [0, 2]))  # tracked: {0,1}, {2,3}
    bd = ExactBoundary(t, g.endpoints)
    bd.insert(1)  # crossing edge
    assert bd.size_of(t.component_id(0)) == 1
    bd.delete(1)
    assert bd.size_of(t.component_id(0)) == 0
    bd.insert(0)  # internal edge touches no list
    assert bd.size_of(t.component_id(0)) == 0


def test_random_interleaving_matches_recomputation():
    rng = np.random.default_rng(3)
    for trial in range(8):
        n = 25
        edges = []
        for _ in range(70):
            u = int(rng.integers(n))
            v = int(rng.integers(n - 1))
            if v >= u:
                v += 1
            edges.append((u, v))
        g = load(n, edges)
        tracked = [e for e in range(g.m) if rng.random() < 0.6]
        t = ComponentTracker(n, items(g, tracked), seed=trial)
        bd = ExactBoundary(t, g.endpoints)
        member_pool = list(range(g.m))
        active = set()
        for e in member_pool:
            if rng.random() < 0.5:
                bd.insert(e)
                active.add(e)
        tracked_alive = set(tracked)
        for _ in range(80):
            r = rng.random()
            if r < 0.4 and tracked_alive:
                e = int(rng.choice(sorted(tracked_alive)))
                tracked_alive.discard(e)
                ev = t.delete(e)
                if ev is not None:
                    bd.on_split(ev)
            elif r < 0.7 and active:
                e = int(rng.choice(sorted(active)))
                active.discard(e)
                bd.delete(e)
            else:
                rest = [e for e in member_pool if e not in active]
                if rest:
                    e = int(rng.choice(rest))
                    active.add(e)
                    bd.insert(e)
            lists_match_scan(bd, g, t)


def make_family_setup(seed=0):
    g = load(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (3, 4)])
    t = ComponentTracker(8, items(g), seed=seed)
    fam = SmallBoundaryFamily(8, t)
    return g, t, fam


def test_family_root_and_initial_components():
    g, t, fam = make_family_setup()
    cid = t.component_id(0)
    assert fam.strict_parent(cid) is fam.root
    assert fam.root.stored == set()
    assert fam.root.size == 8


def test_family_split_parent_rules():
    g, t, fam = make_family_setup()
    whole = t.component_id(0)
    node = fam.attach(whole, {6})          # store the whole component
    ev = t.delete(6)                        # split at the bar 3-4
    fam.on_split(ev)
    # stored parent of both fragments is the stored set, not the root
    assert fam.strict_parent(ev.j) is node
    assert fam.strict_parent(ev.new_id) is node
    assert node.live_comp is None
    # an unstored component's fragments inherit its strict parent
    ev2 = t.delete(1)
    fam.on_split(ev2)
    assert fam.strict_parent(ev2.new_id) is fam.strict_parent(ev2.j)


def test_family_materialize_and_siblings():
    g, t, fam = make_family_setup()
    whole = t.component_id(0)
    node = fam.attach(whole, set())
    ev = t.delete(6)
    fam.on_split(ev)
    assert sorted(fam.materialize(node)) == list(range(8))
    sib = fam.sibling_vertices(ev.new_id)
    assert sorted(sib) == sorted(set(range(8)) - set(ev.vertices))
    # laminarity: members of the family are nested or disjoint
    small = fam.attach(ev.new_id, {6})
    fam2_vertices = set(fam.materialize(small))
    assert fam2_vertices <= set(range(8))


def test_symmetric_difference_identity_against_scan():
    # boundary(C) == boundary(parent) ^ boundary(parent minus C) on the
    # member edge set, for every stored component after random splits
    rng = np.random.default_rng(9)
    n = 30
    edges = []
    for _ in range(90):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        edges.append((u, v))
    g = load(n, edges)
    t = ComponentTracker(n, items(g), seed=2)
    fam = SmallBoundaryFamily(n, t)
    alive = set(range(g.m))
    for _ in range(40):
        e = int(rng.choice(sorted(alive)))
        alive.discard(e)
        ev = t.delete(e)
        if ev is None:
            continue
        fam.on_split(ev)
        for comp in (ev.j, ev.new_id):
            sp = fam.strict_parent(comp)
            parent_vertices = (set(fam.materialize(sp)) if sp is not fam.root
                               else set(range(n)))
            comp_vertices = set(t.component_vertices(comp))
            rest = parent_vertices - comp_vertices
            def bnd(S):
                if not S or S == set(range(n)):
                    return set()
                return {x for x in alive
                        if (int(g.eu[x]) in S) != (int(g.ev[x]) in S)}
            assert bnd(comp_vertices) == bnd(parent_vertices) ^ bnd(rest)
