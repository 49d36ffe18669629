"""Brute-force ground truth: components, bridges, c-edge-connected
components and classes, small max-flow cuts, and perfect-matching counts.

Everything here is a pure function of its input graph: no randomness, no
shared state with the production structures, and independent algorithm
choices wherever a production path computes the same thing (union-find and
recursive low-link here versus Euler-tour forests and iterative Tarjan
there; augmenting-path flows here versus Stoer-Wagner there).
"""

from __future__ import annotations

from collections import deque

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .graph import DynamicGraph


def _alive_items(g: DynamicGraph, alive_only=True):
    for e in range(g.m):
        if not alive_only or g.alive[e]:
            yield e, (int(g.eu[e]), int(g.ev[e]))


def canonical_labels(raw) -> np.ndarray:
    """Relabel a partition array so ids appear in first-occurrence order."""
    raw = np.asarray(raw)
    out = np.empty_like(raw)
    seen: dict[int, int] = {}
    for i, x in enumerate(raw):
        x = int(x)
        if x not in seen:
            seen[x] = len(seen)
        out[i] = seen[x]
    return out


def oracle_components(g: DynamicGraph) -> np.ndarray:
    """Connected-component labels of the alive graph, canonical order."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    ids = np.flatnonzero(g.alive)
    data = np.ones(len(ids))
    mat = sp.csr_matrix((data, (g.eu[ids], g.ev[ids])), shape=(g.n, g.n))
    _, labels = csgraph.connected_components(mat, directed=False)
    return canonical_labels(labels)


def oracle_components_unionfind(g: DynamicGraph) -> np.ndarray:
    """Second, independent component oracle (path-halving union-find)."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _e, (u, v) in _alive_items(g):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return canonical_labels([find(v) for v in range(g.n)])


def _lowlink_bridges(n: int, items) -> set[int]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for eid, (u, v) in items:
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    num = [0] * n
    low = [0] * n
    visited = [False] * n
    bridges: set[int] = set()
    clock = [1]

    def dfs(root):
        # explicit stack recursion to keep depth independent of n
        stack = [(root, -1, iter(adj[root]))]
        visited[root] = True
        num[root] = low[root] = clock[0]
        clock[0] += 1
        while stack:
            v, pedge, it = stack[-1]
            moved = False
            for eid, w in it:
                if eid == pedge:
                    continue
                if not visited[w]:
                    visited[w] = True
                    num[w] = low[w] = clock[0]
                    clock[0] += 1
                    stack.append((w, eid, iter(adj[w])))
                    moved = True
                    break
                low[v] = min(low[v], num[w])
            if not moved:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > num[pv]:
                        bridges.add(pedge)

    for v in range(n):
        if not visited[v]:
            dfs(v)
    return bridges


def oracle_bridges(g: DynamicGraph) -> set[int]:
    """Bridge ids of the alive graph (low-link recompute)."""
    return _lowlink_bridges(g.n, _alive_items(g))


def oracle_bridges_definitional(g: DynamicGraph) -> set[int]:
    """Definitional oracle: an edge is a bridge iff removing it splits."""
    base = oracle_components(g)
    base_count = len(set(base.tolist())) if g.n else 0
    out: set[int] = set()
    for e, (u, v) in _alive_items(g):
        g.alive[e] = False
        labels = oracle_components(g)
        g.alive[e] = True
        if len(set(labels.tolist())) != base_count:
            out.add(e)
    return out


def oracle_2ec_partition(g: DynamicGraph) -> np.ndarray:
    """2-edge-connected components: remove bridges until none remain.

    One round already reaches the fixpoint (an edge on a cycle stays on that
    cycle when bridges leave), but the loop keeps the definition literal.
    """
    dropped: set[int] = set()
    while True:
        items = [(e, uv) for e, uv in _alive_items(g) if e not in dropped]
        found = _lowlink_bridges(g.n, items)
        if not found:
            break
        dropped |= found
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (u, v) in _alive_items(g):
        if e in dropped:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return canonical_labels([find(v) for v in range(g.n)])


def max_flow_at_most(n: int, edge_items, s: int, t: int, cap: int) -> tuple[int, set[int]]:
    """Undirected unit-capacity max flow from s to t, stopping at ``cap``.

    Returns (flow, S) where S is the residual-reachable side of s when the
    flow stalls below ``cap`` (S is empty when the cap was reached).
    """
    residual: dict[int, dict[int, int]] = {}
    for _e, (u, v) in edge_items:
        residual.setdefault(u, {})[v] = residual.setdefault(u, {}).get(v, 0) + 1
        residual.setdefault(v, {})[u] = residual.setdefault(v, {}).get(u, 0) + 1
    flow = 0
    while flow < cap:
        prev = {s: None}
        dq = deque([s])
        while dq and t not in prev:
            x = dq.popleft()
            for y in sorted(residual.get(x, ())):
                if residual[x][y] > 0 and y not in prev:
                    prev[y] = x
                    dq.append(y)
        if t not in prev:
            return flow, set(prev)
        y = t
        while prev[y] is not None:
            x = prev[y]
            residual[x][y] -= 1
            residual.setdefault(y, {})[x] = residual[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow, set()


def _induced_items(g: DynamicGraph, part: set[int]):
    return [(e, uv) for e, uv in _alive_items(g)
            if uv[0] in part and uv[1] in part]


def _components_of_items(vertices: set[int], items) -> list[set[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for _e, (u, v) in items:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps = []
    for v in sorted(vertices):
        if v in seen:
            continue
        comp = {v}
        dq = deque([v])
        seen.add(v)
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    dq.append(y)
        comps.append(comp)
    return comps


def oracle_c_components(g: DynamicGraph, c: int, shuffle_rng=None) -> np.ndarray:
    """c-edge-connected components by repeatedly removing <c cuts.

    Each refinement step finds, inside one current part, a cut of the
    induced subgraph of size < c via unit-capacity augmenting paths, splits
    the part, and recurses.  ``shuffle_rng`` optionally randomizes which
    part is refined first; the final partition is independent of that order.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    if g.n == 0:
        return np.zeros(0, dtype=np.int64)
    base = oracle_components(g)
    queue: list[set[int]] = [set(np.flatnonzero(base == lbl).tolist())
                             for lbl in sorted(set(base.tolist()))]
    final: list[set[int]] = []
    while queue:
        if shuffle_rng is not None:
            idx = int(shuffle_rng.integers(len(queue)))
            part = queue.pop(idx)
        else:
            part = queue.pop()
        if len(part) == 1:
            final.append(part)
            continue
        items = _induced_items(g, part)
        s = min(part)
        split_side: set[int] | None = None
        order = sorted(part - {s})
        if shuffle_rng is not None:
            perm = shuffle_rng.permutation(len(order))
            order = [order[int(i)] for i in perm]
        for t in order:
            flow, side = max_flow_at_most(g.n, items, s, t, c)
            if flow < c:
                split_side = side & part
                break
        if split_side is None:
            final.append(part)
        else:
            remaining = [(e, uv) for e, uv in items
                         if (uv[0] in split_side) == (uv[1] in split_side)]
            for comp in _components_of_items(part, remaining):
                queue.append(comp)
    labels = np.zeros(g.n, dtype=np.int64)
    for i, part in enumerate(final):
        for v in part:
            labels[v] = i
    return canonical_labels(labels)


def oracle_c_classes(g: DynamicGraph, c: int) -> np.ndarray:
    """c-edge-connected classes: pairwise max-flow equivalence.

    Being c-edge-connected is an equivalence relation, so pairs already in
    one class are skipped.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comp = oracle_components(g)
    items = list(_alive_items(g))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if comp[u] != comp[v]:
                continue
            if find(u) == find(v):
                continue
            flow, _ = max_flow_at_most(g.n, items, u, v, c)
            if flow >= c:
                parent[find(u)] = find(v)
    return canonical_labels([find(v) for v in range(g.n)])


def count_inter_part_edges(g: DynamicGraph, labels: np.ndarray) -> int:
    ids = np.flatnonzero(g.alive)
    return int(np.count_nonzero(labels[g.eu[ids]] != labels[g.ev[ids]]))


def enumerate_perfect_matchings(g: DynamicGraph, limit: int = 2):
    """Count perfect matchings of the alive graph, stopping at ``limit``.

    Matchings are edge-id sets, so parallel edges yield distinct matchings.
    Returns (count_clamped, one_matching_or_None).
    """
    if g.n % 2 == 1:
        return 0, None
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for e, (u, v) in _alive_items(g):
        adj[u].append((e, v))
        adj[v].append((e, u))
    matched = [False] * g.n
    found: list[list[int]] = []
    chosen: list[int] = []

    def rec() -> bool:
        if len(found) >= limit:
            return True
        v = -1
        for x in range(g.n):
            if not matched[x]:
                v = x
                break
        if v == -1:
            found.append(sorted(chosen))
            return len(found) >= limit
        matched[v] = True
        for e, w in adj[v]:
            if matched[w]:
                continue
            matched[w] = True
            chosen.append(e)
            if rec():
                matched[w] = False
                chosen.pop()
                matched[v] = False
                return True
            chosen.pop()
            matched[w] = False
        matched[v] = False
        return False

    rec()
    return len(found), (found[0] if found else None)
