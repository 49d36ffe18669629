"""Restricted fully-dynamic connectivity with explicit component ids.

Inserted edges must have their endpoints already connected, so components
only ever split.  The spanning forest uses Euler tour trees with the
edge-level amortization of Holm, de Lichtenberg, and Thorup for replacement
search: every tree edge carries a level, forest i spans the edges of level
at least i, and failed searches push edges one level up, which bounds the
total search work.

Each split is reported as an event naming the surviving component, the new
component id, and the vertices that moved; the moved side is the smaller
one, with the deterministic tie rule that the side not containing the
lowest-numbered vertex moves out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ett import EulerTourForest


class TrackerError(RuntimeError):
    """Contract violation: bad insert/delete or a stale component id."""


@dataclass(frozen=True)
class SplitEvent:
    j: int                  # id of the component that was split (keeps the rest)
    new_id: int             # id assigned to the moved side
    vertices: tuple         # moved side, ascending vertex order
    time: int               # update counter at which the split happened


class ComponentTracker:
    def __init__(self, n: int, edges=(), seed: int = 0):
        """Track components of a graph on n vertices.

        ``edges`` is an iterable of (eid, u, v); initial edges need not obey
        the connected-endpoints rule (the initial forest is built from
        scratch).
        """
        self.n = n
        self.levels = max(1, math.ceil(math.log2(n))) if n >= 2 else 1
        self.forests = [EulerTourForest(n, seed=seed * 1031 + i) for i in range(self.levels + 1)]
        self.edge_ends: dict[int, tuple[int, int]] = {}
        self._tree_level: dict[int, int] = {}
        self._arcs: list[dict[int, tuple]] = [dict() for _ in range(self.levels + 1)]
        self._nt_level: dict[int, int] = {}
        self._nt_adj: list[dict[int, set[int]]] = [dict() for _ in range(self.levels + 1)]
        self._te_adj: list[dict[int, set[int]]] = [dict() for _ in range(self.levels + 1)]
        self.version = 0
        self.time = 0

        for eid, u, v in edges:
            self._add_edge_initial(eid, u, v)

        self.q = np.full(n, -1, dtype=np.int64)
        self.comp_vertices: dict[int, set[int]] = {}
        next_id = 0
        for v in range(n):
            if self.q[v] < 0:
                members = self.forests[0].tree_vertices(v)
                for w in members:
                    self.q[w] = next_id
                self.comp_vertices[next_id] = set(members)
                next_id += 1
        self._next_id = next_id
        self.split_log: list[SplitEvent] = []
        self.split_mass = 0

    # -- construction and edge bookkeeping

    def _add_edge_initial(self, eid: int, u: int, v: int) -> None:
        if eid in self.edge_ends:
            raise TrackerError(f"edge {eid} inserted twice")
        self.edge_ends[eid] = (u, v)
        if self.forests[0].connected(u, v):
            self._nt_level[eid] = 0
            self._nt_adj[0].setdefault(u, set()).add(eid)
            self._nt_adj[0].setdefault(v, set()).add(eid)
        else:
            self._make_tree_edge(eid, u, v, 0)
        self.version += 1

    def _make_tree_edge(self, eid: int, u: int, v: int, level: int) -> None:
        self._tree_level[eid] = level
        self._te_adj[level].setdefault(u, set()).add(eid)
        self._te_adj[level].setdefault(v, set()).add(eid)
        for i in range(level + 1):
            self._arcs[i][eid] = self.forests[i].link(u, v)

    def insert(self, eid: int, u: int, v: int) -> None:
        """Insert an edge whose endpoints are currently connected.

        A disconnected insert would merge components, which this structure
        must never do; it is rejected loudly.
        """
        if eid in self.edge_ends:
            raise TrackerError(f"edge {eid} inserted twice")
        if u == v:
            raise TrackerError("self-loops are not tracked")
        if self.q[u] != self.q[v]:
            raise TrackerError(
                f"insert of ({u}, {v}) would merge components {self.q[u]} and {self.q[v]}")
        self.edge_ends[eid] = (u, v)
        self._nt_level[eid] = 0
        self._nt_adj[0].setdefault(u, set()).add(eid)
        self._nt_adj[0].setdefault(v, set()).add(eid)
        self.version += 1
        self.time += 1

    def has_edge(self, eid: int) -> bool:
        return eid in self.edge_ends

    def delete(self, eid: int) -> SplitEvent | None:
        """Delete an edge; returns a split event if a component broke up."""
        if eid not in self.edge_ends:
            raise TrackerError(f"edge {eid} is not tracked")
        self.version += 1
        self.time += 1
        u, v = self.edge_ends.pop(eid)
        if eid in self._nt_level:
            lv = self._nt_level.pop(eid)
            self._nt_adj[lv][u].discard(eid)
            self._nt_adj[lv][v].discard(eid)
            return None

        lv = self._tree_level.pop(eid)
        self._te_adj[lv][u].discard(eid)
        self._te_adj[lv][v].discard(eid)
        for i in range(lv + 1):
            a, b = self._arcs[i].pop(eid)
            self.forests[i].cut(a, b)

        if self._search_replacement(u, v, lv):
            return None
        return self._emit_split(u, v)

    def _search_replacement(self, u: int, v: int, lv: int) -> bool:
        for i in range(lv, -1, -1):
            fi = self.forests[i]
            su = fi.tree_size(u)
            sv = fi.tree_size(v)
            side = v if sv < su or (sv == su) else u
            side_root = fi.tree_root(side)
            side_vertices = fi.tree_vertices(side)
            # push the side's tree edges of this level one level up
            for w in side_vertices:
                pend = self._te_adj[i].get(w)
                if not pend:
                    continue
                for te in list(pend):
                    if self._tree_level.get(te) != i:
                        continue
                    a, b = self.edge_ends[te]
                    self._te_adj[i][a].discard(te)
                    self._te_adj[i][b].discard(te)
                    self._tree_level[te] = i + 1
                    self._te_adj[i + 1].setdefault(a, set()).add(te)
                    self._te_adj[i + 1].setdefault(b, set()).add(te)
                    self._arcs[i + 1][te] = self.forests[i + 1].link(a, b)
            # scan the side's non-tree edges of this level
            for w in side_vertices:
                cand = self._nt_adj[i].get(w)
                if not cand:
                    continue
                for nte in list(cand):
                    if self._nt_level.get(nte) != i:
                        continue
                    a, b = self.edge_ends[nte]
                    if fi.tree_root(a) is side_root and fi.tree_root(b) is side_root:
                        # internal to the searched side: pay by pushing it up
                        self._nt_adj[i][a].discard(nte)
                        self._nt_adj[i][b].discard(nte)
                        del self._nt_level[nte]
                        self._nt_level[nte] = i + 1
                        self._nt_adj[i + 1].setdefault(a, set()).add(nte)
                        self._nt_adj[i + 1].setdefault(b, set()).add(nte)
                    else:
                        # reconnects the two sides: promote to tree edge
                        self._nt_adj[i][a].discard(nte)
                        self._nt_adj[i][b].discard(nte)
                        del self._nt_level[nte]
                        self._make_tree_edge(nte, a, b, i)
                        return True
        return False

    def _emit_split(self, u: int, v: int) -> SplitEvent:
        f0 = self.forests[0]
        su, sv = f0.tree_size(u), f0.tree_size(v)
        if su < sv:
            moved_anchor = u
        elif sv < su:
            moved_anchor = v
        else:
            vu = f0.tree_vertices(u)
            vv = f0.tree_vertices(v)
            moved_anchor = u if min(vu) > min(vv) else v
        moved = sorted(f0.tree_vertices(moved_anchor))
        old_id = int(self.q[moved[0]])
        new_id = self._next_id
        self._next_id += 1
        old_set = self.comp_vertices[old_id]
        for w in moved:
            self.q[w] = new_id
            old_set.discard(w)
        self.comp_vertices[new_id] = set(moved)
        self.split_mass += len(moved)
        ev = SplitEvent(j=old_id, new_id=new_id, vertices=tuple(moved), time=self.time)
        self.split_log.append(ev)
        return ev

    # -- component queries

    def component_id(self, v: int) -> int:
        return int(self.q[v])

    def component_size(self, cid: int) -> int:
        try:
            return len(self.comp_vertices[cid])
        except KeyError:
            raise TrackerError(f"unknown component id {cid}") from None

    def component_vertices(self, cid: int) -> list[int]:
        try:
            return sorted(self.comp_vertices[cid])
        except KeyError:
            raise TrackerError(f"unknown component id {cid}") from None

    def component_ids(self) -> list[int]:
        return sorted(self.comp_vertices.keys())

    def component_count(self) -> int:
        return len(self.comp_vertices)

    def same_component(self, u: int, v: int) -> bool:
        return self.q[u] == self.q[v]

    def edge_items(self):
        return self.edge_ends.items()
