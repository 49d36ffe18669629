"""Euler tour trees over randomized treaps.

Each tree of the forest is stored as its Euler tour: one loop node per
vertex plus two arc nodes per tree edge, kept in a treap ordered by tour
position.  Link, cut, connectivity, tree size, and vertex enumeration all
reduce to treap splits and merges around those nodes.
"""

from __future__ import annotations

import random


class TourNode:
    __slots__ = ("left", "right", "parent", "prio", "cnt", "loops", "vertex")

    def __init__(self, prio: int, vertex: int | None):
        self.left = None
        self.right = None
        self.parent = None
        self.prio = prio
        self.vertex = vertex  # loop nodes carry their vertex, arcs carry None
        self.cnt = 1
        self.loops = 1 if vertex is not None else 0


def _cnt(x) -> int:
    return x.cnt if x is not None else 0


def _loops(x) -> int:
    return x.loops if x is not None else 0


def _update(x: TourNode) -> None:
    x.cnt = 1 + _cnt(x.left) + _cnt(x.right)
    x.loops = (1 if x.vertex is not None else 0) + _loops(x.left) + _loops(x.right)


def _merge(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        r = _merge(a.right, b)
        a.right = r
        r.parent = a
        _update(a)
        return a
    l = _merge(a, b.left)
    b.left = l
    l.parent = b
    _update(b)
    return b


def _root_of(x: TourNode) -> TourNode:
    while x.parent is not None:
        x = x.parent
    return x


def _split_before(x: TourNode):
    """Split the treap containing ``x`` into (before x, x and after)."""
    left = x.left
    if left is not None:
        left.parent = None
        x.left = None
        _update(x)
    right = x
    cur = x
    p = cur.parent
    cur.parent = None
    while p is not None:
        gp = p.parent
        p.parent = None
        if p.left is cur:
            p.left = None
            _update(p)
            right = _merge(right, p)
        else:
            p.right = None
            _update(p)
            left = _merge(p, left)
        cur = p
        p = gp
    return left, right


def _detach_first(t: TourNode):
    """Remove and return the first tour node; also return the remainder."""
    x = t
    while x.left is not None:
        x = x.left
    r = x.right
    p = x.parent
    x.right = None
    if r is not None:
        r.parent = p
    if p is None:
        if r is not None:
            r.parent = None
        return x, r
    p.left = r
    x.parent = None
    while p is not None:
        _update(p)
        last = p
        p = p.parent
    return x, last


class EulerTourForest:
    """Forest on vertices 0..n-1 with link/cut by explicit arc handles."""

    def __init__(self, n: int, seed: int = 0):
        self.n = n
        self._rng = random.Random(seed)
        self.loop = [TourNode(self._rng.getrandbits(60), v) for v in range(n)]

    def _new_arc(self) -> TourNode:
        return TourNode(self._rng.getrandbits(60), None)

    def tree_root(self, v: int) -> TourNode:
        return _root_of(self.loop[v])

    def connected(self, u: int, v: int) -> bool:
        return _root_of(self.loop[u]) is _root_of(self.loop[v])

    def tree_size(self, v: int) -> int:
        return _root_of(self.loop[v]).loops

    def _reroot(self, v: int) -> TourNode:
        # rotate the tour so it begins with v's loop node
        before, after = _split_before(self.loop[v])
        return _merge(after, before)

    def link(self, u: int, v: int) -> tuple[TourNode, TourNode]:
        """Join the trees of u and v; returns the two arc handles for cut."""
        tu = self._reroot(u)
        tv = self._reroot(v)
        a_uv = self._new_arc()
        a_vu = self._new_arc()
        _merge(_merge(_merge(tu, a_uv), tv), a_vu)
        return a_uv, a_vu

    @staticmethod
    def _pos(x: TourNode) -> int:
        r = _cnt(x.left)
        cur = x
        p = cur.parent
        while p is not None:
            if p.right is cur:
                r += _cnt(p.left) + 1
            cur = p
            p = p.parent
        return r

    def cut(self, a_uv: TourNode, a_vu: TourNode) -> None:
        if self._pos(a_uv) > self._pos(a_vu):
            a_uv, a_vu = a_vu, a_uv
        _outer_l, rest = _split_before(a_uv)
        _mid, right = _split_before(a_vu)
        _arc1, inner = _detach_first(_mid)
        _arc2, tail = _detach_first(right)
        if inner is not None:
            inner.parent = None
        _merge(_outer_l, tail)

    def tree_vertices(self, v: int) -> list[int]:
        """Vertices of v's tree in tour order.

        The tour of a k-vertex tree holds k loop nodes and 2(k-1) arcs, so
        the in-order walk is O(k).
        """
        out: list[int] = []
        stack: list[TourNode] = []
        cur = _root_of(self.loop[v])
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            x = stack.pop()
            if x.vertex is not None:
                out.append(x.vertex)
            cur = x.right
        return out
