import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deconn.graph import DynamicGraph, EdgeMask, GraphError, boundary_scan, degree, load


def test_load_triangle():
    g = load(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m_alive == 3
    assert g.endpoints(0) == (0, 1)


def test_parallel_edges_are_distinct():
    g = load(2, [(0, 1), (0, 1)])
    assert g.m_alive == 2
    assert degree(g, None, 0) == 2


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        load(2, [(0, 0)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(GraphError):
        load(2, [(0, 2)])


def test_delete_and_double_delete():
    g = load(3, [(0, 1), (1, 2), (0, 2)])
    g.delete(0)
    assert g.m_alive == 2
    assert degree(g, None, 0) == 1
    with pytest.raises(GraphError):
        g.delete(0)


def test_delete_all_any_order():
    g = load(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    for e in [3, 0, 5, 1, 4, 2]:
        g.delete(e)
    assert g.m_alive == 0
    assert all(degree(g, None, v) == 0 for v in range(5))


def test_boundary_path():
    g = load(3, [(0, 1), (1, 2)])
    assert boundary_scan(g, None, {1}) == {0, 1}
    assert boundary_scan(g, None, {0, 1, 2}) == set()


def test_boundary_matches_double_loop_on_random_graphs():
    rng = np.random.default_rng(0)
    for trial in range(20):
        n = 20
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = load(n, edges)
        for e in range(g.m):
            if rng.random() < 0.2:
                g.delete(e)
        S = {v for v in range(n) if rng.random() < 0.4} or {0}
        brute = {e for e in range(g.m) if g.alive[e]
                 and (int(g.eu[e]) in S) != (int(g.ev[e]) in S)}
        assert boundary_scan(g, None, S) == brute


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_boundary_symmetry_and_degree_sum(data):
    n = data.draw(st.integers(2, 12))
    m = data.draw(st.integers(0, 25))
    full = []
    for _ in range(m):
        u = data.draw(st.integers(0, n - 1))
        v = data.draw(st.integers(0, n - 2))
        if v >= u:
            v += 1
        full.append((u, v))
    g = load(n, full)
    if m:
        for e in data.draw(st.sets(st.integers(0, m - 1), max_size=m)):
            if g.alive[e]:
                g.delete(e)
    S = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))
    comp = set(range(n)) - S
    if comp:
        assert boundary_scan(g, None, S) == boundary_scan(g, None, comp)
    assert sum(degree(g, None, v) for v in range(n)) == 2 * g.m_alive


def test_mask_restricts_operations():
    g = load(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    mk = EdgeMask.of(g, [0, 2])
    assert degree(g, mk, 1) == 1
    assert boundary_scan(g, mk, {1}) == {0}
    assert mk.count_alive() == 2
    g.delete(0)
    assert mk.count_alive() == 1


def test_degenerate_sizes():
    g = load(0, [])
    assert g.m_alive == 0
    g1 = load(1, [])
    assert degree(g1, None, 0) == 0


def test_star_degrees():
    g = load(4, [(0, 1), (0, 2), (0, 3)])
    assert degree(g, None, 0) == 3
    assert degree(g, None, 2) == 1
