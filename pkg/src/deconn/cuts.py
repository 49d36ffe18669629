"""Naive fully-dynamic small-cut oracle and c-connected-component pruning.

The oracle recomputes from scratch on demand: nothing for c=1, Tarjan
bridges for c=2, and a Stoer-Wagner global min cut per component for c>=3.
Results are cached against the tracker's version counter so a pruning loop
pays one recompute per batch of cut edges rather than one per edge.

The polylogarithmic structures that would make these updates fast are
deliberately not implemented; the oracle interface isolates that choice.
"""

from __future__ import annotations

from .tracker import ComponentTracker


def tarjan_bridges(n: int, edge_items) -> list[int]:
    """Bridge edge ids of the multigraph given as (eid, (u, v)) items.

    Iterative low-link DFS; the tree arc is skipped by edge id, so a
    parallel companion edge correctly cancels bridge-ness.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid, (u, v) in edge_items:
        adj.setdefault(u, []).append((eid, v))
        adj.setdefault(v, []).append((eid, u))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: list[int] = []
    counter = 0
    for start in adj:
        if start in disc:
            continue
        stack = [(start, -1, 0)]
        disc[start] = low[start] = counter
        counter += 1
        while stack:
            v, pedge, idx = stack.pop()
            lst = adj[v]
            advanced = False
            while idx < len(lst):
                eid, w = lst[idx]
                idx += 1
                if eid == pedge:
                    continue
                if w not in disc:
                    stack.append((v, pedge, idx))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced and pedge != -1:
                # v is finished; propagate low to the DFS parent below us
                pv, _, _ = stack[-1] if stack else (None, None, None)
                if pv is not None:
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        bridges.append(pedge)
    return sorted(bridges)


def stoer_wagner_min_cut(vertices: list[int], weighted_edges) -> tuple[int, set[int]]:
    """Global min cut of a connected weighted graph.

    ``weighted_edges`` maps frozenset({u, v}) -> weight.  Returns the cut
    weight and one side of the cut as a vertex set.  Weight of an empty or
    single-vertex graph is reported as +inf (no cut exists).
    """
    verts = list(vertices)
    if len(verts) < 2:
        return (1 << 60), set()
    # merged[x] tracks original vertices contracted into x
    merged = {v: {v} for v in verts}
    w = {v: {} for v in verts}
    for pair, wt in weighted_edges.items():
        u, v = tuple(pair)
        w[u][v] = w[u].get(v, 0) + wt
        w[v][u] = w[v].get(u, 0) + wt
    best = (1 << 60)
    best_side: set[int] = set()
    active = sorted(verts)
    while len(active) > 1:
        # maximum adjacency order starting from the smallest active vertex
        a = [active[0]]
        seen = {active[0]}
        weights = {v: w[active[0]].get(v, 0) for v in active if v not in seen}
        while len(a) < len(active):
            nxt = max(sorted(weights), key=lambda v: weights[v])
            a.append(nxt)
            seen.add(nxt)
            del weights[nxt]
            for v, wt in w[nxt].items():
                if v in weights:
                    weights[v] += wt
        s, t = a[-2], a[-1]
        cut_of_phase = sum(w[t].values())
        if cut_of_phase < best:
            best = cut_of_phase
            best_side = set(merged[t])
        # contract t into s
        merged[s] |= merged[t]
        for v, wt in list(w[t].items()):
            if v == s:
                continue
            w[s][v] = w[s].get(v, 0) + wt
            w[v][s] = w[v].get(s, 0) + wt
        for v in w[t]:
            del w[v][t]
        del w[t]
        active.remove(t)
    return best, best_side


class NaiveCutOracle:
    """Maintains some alive edge on a cut of size < c of its component.

    Returns None exactly when every connected component of the tracked
    graph is c-edge-connected.
    """

    def __init__(self, c: int, tracker: ComponentTracker):
        if c < 1:
            raise ValueError("connectivity order must be >= 1")
        self.c = c
        self.tracker = tracker
        self._cache_version = -1
        self._cached: list[int] = []

    def _recompute(self) -> None:
        tr = self.tracker
        if self.c == 1:
            self._cached = []
        elif self.c == 2:
            self._cached = tarjan_bridges(tr.n, tr.edge_items())
        else:
            found: list[int] = []
            by_comp: dict[int, dict] = {}
            for eid, (u, v) in tr.edge_items():
                cid = tr.component_id(u)
                by_comp.setdefault(cid, {})[eid] = (u, v)
            for cid in sorted(by_comp):
                edges = by_comp[cid]
                verts = sorted({x for uv in edges.values() for x in uv})
                weighted: dict[frozenset, int] = {}
                for eid, (u, v) in edges.items():
                    key = frozenset((u, v))
                    weighted[key] = weighted.get(key, 0) + 1
                cut_w, side = stoer_wagner_min_cut(verts, weighted)
                if cut_w < self.c:
                    for eid in sorted(edges):
                        u, v = edges[eid]
                        if (u in side) != (v in side):
                            found.append(eid)
            self._cached = sorted(found)
        self._cache_version = self.tracker.version

    def find_edge_on_small_cut(self) -> int | None:
        if self._cache_version != self.tracker.version:
            self._recompute()
        while self._cached:
            eid = self._cached[0]
            if self.tracker.has_edge(eid):
                return eid
            self._cached.pop(0)
        return None

    def consume(self, eid: int) -> None:
        """Caller deleted ``eid``; keep the cache if it is still valid.

        For c=2 the remaining cached bridges stay bridges after a bridge is
        removed (a non-bridge lies on a cycle and cycles never contain
        bridges), so the cache survives; for c>=3 cut membership can change,
        so the cache is dropped.
        """
        if self._cached and self._cached[0] == eid:
            self._cached.pop(0)
        if self.c >= 3:
            self._cache_version = -1
        else:
            self._cache_version = self.tracker.version


def cut_oracle_naive(c: int, tracker: ComponentTracker) -> NaiveCutOracle:
    return NaiveCutOracle(c, tracker)


def prune_to_c_components(oracle: NaiveCutOracle, on_delete=None):
    """Repeatedly delete edges on <c cuts until components are c-connected.

    Every deletion goes through the tracker so split events fire;
    ``on_delete(eid, split_event_or_None)`` observes each pruned edge.
    Returns the list of pruned edge ids in deletion order.
    """
    pruned: list[int] = []
    while True:
        eid = oracle.find_edge_on_small_cut()
        if eid is None:
            return pruned
        ev = oracle.tracker.delete(eid)
        oracle.consume(eid)
        pruned.append(eid)
        if on_delete is not None:
            on_delete(eid, ev)
