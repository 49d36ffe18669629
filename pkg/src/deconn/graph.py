"""Undirected multigraph with stable edge ids, deletions, and edge-subset views.

Every other structure in this package (level pools, sampled cores, the
certificate, probe subgraphs) is a view over one shared edge array held here.
Edge ids are dense integers assigned in input order and never reused; a
deleted edge keeps its id and is marked dead.
"""

from __future__ import annotations

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input or illegal graph operations."""


class DynamicGraph:
    """Undirected multigraph supporting edge deletion only.

    Parallel edges are allowed, self-loops are not.  Adjacency lists hold
    exactly the alive incident edge ids, so ``degree(v)`` is their length.
    """

    def __init__(self, n: int, edge_list):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        edges = list(edge_list)
        m = len(edges)
        self.n = n
        self.m = m
        self.eu = np.zeros(m, dtype=np.int64)
        self.ev = np.zeros(m, dtype=np.int64)
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge {i}: endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphError(f"edge {i}: self-loop at vertex {u}")
            self.eu[i] = u
            self.ev[i] = v
        self.alive = np.ones(m, dtype=bool)
        self.m_alive = m
        self.adj: list[list[int]] = [[] for _ in range(n)]
        for i in range(m):
            self.adj[self.eu[i]].append(i)
            self.adj[self.ev[i]].append(i)
        # adjacency position of each edge at both endpoints, for O(1) removal
        self._pos_u = np.zeros(m, dtype=np.int64)
        self._pos_v = np.zeros(m, dtype=np.int64)
        counts = [0] * n
        for i in range(m):
            self._pos_u[i] = counts[self.eu[i]]
            counts[self.eu[i]] += 1
            self._pos_v[i] = counts[self.ev[i]]
            counts[self.ev[i]] += 1

    def endpoints(self, e: int) -> tuple[int, int]:
        return int(self.eu[e]), int(self.ev[e])

    def other(self, e: int, v: int) -> int:
        u = self.eu[e]
        return int(self.ev[e]) if u == v else int(u)

    def is_alive(self, e: int) -> bool:
        return bool(self.alive[e])

    def delete(self, e: int) -> None:
        """Mark edge ``e`` dead and drop it from both adjacency lists.

        Deleting a dead edge is an error: a driver issuing double deletions
        is confused about its own state and must hear about it.
        """
        if not (0 <= e < self.m):
            raise GraphError(f"unknown edge id {e}")
        if not self.alive[e]:
            raise GraphError(f"edge {e} deleted twice")
        self.alive[e] = False
        self.m_alive -= 1
        self._adj_remove(int(self.eu[e]), e, self._pos_u)
        self._adj_remove(int(self.ev[e]), e, self._pos_v)

    def _adj_remove(self, v: int, e: int, pos_arr) -> None:
        # swap-remove; patch the moved edge's stored position (no self-loops,
        # so the moved edge sits in adj[v] via exactly one of its endpoints)
        lst = self.adj[v]
        i = int(pos_arr[e])
        last = lst[-1]
        lst[i] = last
        lst.pop()
        if last != e:
            if self.eu[last] == v:
                self._pos_u[last] = i
            else:
                self._pos_v[last] = i

    def alive_edges(self) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.alive)]

    def incident(self, v: int) -> list[int]:
        return list(self.adj[v])


class EdgeMask:
    """Membership flags for a subset of a graph's edge ids.

    A mask never stores ids outside its parent graph's id space.  Masks over
    derived subgraphs are updated before the parent edge is finalized as
    deleted, so transiently a mask may include an edge the parent is about to
    retire; between updates every masked edge is alive.
    """

    def __init__(self, graph: DynamicGraph, member=None):
        self.graph = graph
        if member is None:
            self.member = np.zeros(graph.m, dtype=bool)
        else:
            self.member = np.asarray(member, dtype=bool).copy()
            if self.member.shape != (graph.m,):
                raise GraphError("mask length does not match edge count")

    @classmethod
    def full(cls, graph: DynamicGraph) -> "EdgeMask":
        return cls(graph, np.ones(graph.m, dtype=bool))

    @classmethod
    def of(cls, graph: DynamicGraph, ids) -> "EdgeMask":
        mk = cls(graph)
        for e in ids:
            mk.member[e] = True
        return mk

    def __contains__(self, e: int) -> bool:
        return bool(self.member[e])

    def add(self, e: int) -> None:
        self.member[e] = True

    def discard(self, e: int) -> None:
        self.member[e] = False

    def count_alive(self) -> int:
        return int(np.count_nonzero(self.member & self.graph.alive))

    def alive_ids(self) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.member & self.graph.alive)]


def load(n: int, edge_list) -> DynamicGraph:
    """Build a graph from ``(u, v)`` pairs; ids follow input order."""
    return DynamicGraph(n, edge_list)


def boundary_scan(g: DynamicGraph, mask: EdgeMask | None, S) -> set[int]:
    """Edges with exactly one endpoint in ``S``, by direct adjacency scan.

    Reference implementation; the sketch-based oracle is checked against it.
    """
    sset = set(S)
    if not sset:
        raise GraphError("boundary of an empty vertex set is undefined")
    out: set[int] = set()
    for v in sset:
        for e in g.adj[v]:
            if mask is not None and e not in mask:
                continue
            if g.other(e, v) not in sset:
                out.add(e)
    return out


def degree(g: DynamicGraph, mask: EdgeMask | None, v: int) -> int:
    """Alive masked incident edges; parallel edges count with multiplicity."""
    if mask is None:
        return len(g.adj[v])
    return sum(1 for e in g.adj[v] if e in mask)
