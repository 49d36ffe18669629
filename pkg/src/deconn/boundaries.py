"""Boundary maintenance for splitting component partitions.

Two layers live here:

* ``ExactBoundary`` keeps, for every current component of a tracker, the
  explicit set of member edges with exactly one endpoint inside.  Edge
  insert/delete is O(1); a split is repaired by scanning the moved side's
  member-edge adjacency, whose cost telescopes because a vertex moves only
  when its component at least halves.

* ``SmallBoundaryFamily`` records every component that was ever classified
  as having a small probe boundary, as a laminar forest under the
  "smallest strictly containing stored set" parent relation.  It exists so
  a component turning small late can obtain its boundary either by one
  oracle query on its own (small) vertex set or by querying its siblings
  and taking a symmetric difference with the stored parent boundary.
"""

from __future__ import annotations

from .tracker import ComponentTracker, SplitEvent


class ExactBoundary:
    """Boundary edge lists of tracker components over a member edge subset."""

    def __init__(self, tracker: ComponentTracker, endpoints):
        self.tracker = tracker
        self._endpoints = endpoints
        self.lists: dict[int, set[int]] = {}
        self.adj: dict[int, set[int]] = {}
        self.member: set[int] = set()

    def insert(self, e: int) -> list[int]:
        """Add a member edge; returns component ids whose lists grew."""
        if e in self.member:
            raise ValueError(f"edge {e} already a member")
        self.member.add(e)
        u, v = self._endpoints(e)
        self.adj.setdefault(u, set()).add(e)
        self.adj.setdefault(v, set()).add(e)
        qu = self.tracker.component_id(u)
        qv = self.tracker.component_id(v)
        if qu != qv:
            self.lists.setdefault(qu, set()).add(e)
            self.lists.setdefault(qv, set()).add(e)
            return [qu, qv]
        return []

    def delete(self, e: int) -> list[int]:
        """Remove a member edge; returns component ids whose lists shrank."""
        if e not in self.member:
            raise ValueError(f"edge {e} is not a member")
        self.member.discard(e)
        u, v = self._endpoints(e)
        self.adj[u].discard(e)
        self.adj[v].discard(e)
        qu = self.tracker.component_id(u)
        qv = self.tracker.component_id(v)
        if qu != qv:
            self.lists.get(qu, set()).discard(e)
            self.lists.get(qv, set()).discard(e)
            return [qu, qv]
        return []

    def on_split(self, ev: SplitEvent) -> None:
        """Repair lists after a split; call after the tracker updated ids.

        Scans member edges incident to the moved side: an edge whose other
        end stayed behind just became crossing; one whose other end is in a
        third component moves between lists; edges inside the moved side
        stay internal.
        """
        moved = set(ev.vertices)
        lj = self.lists.setdefault(ev.j, set())
        ln = self.lists.setdefault(ev.new_id, set())
        for w in ev.vertices:
            for e in self.adj.get(w, ()):
                u, v = self._endpoints(e)
                other = v if u == w else u
                if other in moved:
                    continue
                qo = self.tracker.component_id(other)
                if qo == ev.j:
                    lj.add(e)
                    ln.add(e)
                else:
                    lj.discard(e)
                    ln.add(e)

    def size_of(self, comp: int) -> int:
        return len(self.lists.get(comp, ()))

    def list_of(self, comp: int) -> set[int]:
        return self.lists.get(comp, set())


class FamilyNode:
    __slots__ = ("parent", "size", "stored", "live_comp", "child_nodes", "child_comps")

    def __init__(self, parent, size: int, stored: set[int], live_comp):
        self.parent = parent
        self.size = size
        self.stored = stored          # current top-pool boundary of this set
        self.live_comp = live_comp    # component id while the set is current
        self.child_nodes: list[FamilyNode] = []
        self.child_comps: set[int] = set()


class SmallBoundaryFamily:
    """Laminar history of small-boundary components with parent pointers."""

    def __init__(self, n: int, tracker: ComponentTracker):
        self.tracker = tracker
        self.root = FamilyNode(None, n, set(), None)
        self.comp_parent: dict[int, FamilyNode] = {}
        self.comp_node: dict[int, FamilyNode | None] = {}
        for cid in tracker.component_ids():
            self.comp_parent[cid] = self.root
            self.comp_node[cid] = None
            self.root.child_comps.add(cid)

    def on_split(self, ev: SplitEvent) -> None:
        j, new = ev.j, ev.new_id
        node_j = self.comp_node[j]
        if node_j is not None:
            # the split component's set survives as a family node; both
            # fragments become its children and re-classify from scratch
            node_j.live_comp = None
            self.comp_node[j] = None
            self.comp_parent[j] = node_j
            node_j.child_comps.add(j)
            parent_for = node_j
        else:
            parent_for = self.comp_parent[j]
        self.comp_parent[new] = parent_for
        self.comp_node[new] = None
        parent_for.child_comps.add(new)

    def is_stored(self, comp: int) -> bool:
        return self.comp_node.get(comp) is not None

    def node_of(self, comp: int) -> FamilyNode | None:
        return self.comp_node.get(comp)

    def strict_parent(self, comp: int) -> FamilyNode:
        return self.comp_parent[comp]

    def attach(self, comp: int, stored: set[int]) -> FamilyNode:
        """Record ``comp`` as a stored small-boundary set."""
        sp = self.comp_parent[comp]
        node = FamilyNode(sp, self.tracker.component_size(comp), stored, comp)
        sp.child_comps.discard(comp)
        sp.child_nodes.append(node)
        self.comp_node[comp] = node
        return node

    def materialize(self, node: FamilyNode) -> list[int]:
        """Vertices of a family set, gathered from its live descendants."""
        out: list[int] = []
        stack = [node]
        while stack:
            cur = stack.pop()
            if cur.live_comp is not None:
                out.extend(self.tracker.comp_vertices[cur.live_comp])
                continue
            stack.extend(cur.child_nodes)
            for cid in cur.child_comps:
                out.extend(self.tracker.comp_vertices[cid])
        return out

    def sibling_vertices(self, comp: int) -> list[int]:
        """Vertices of strict_parent(comp) minus comp itself."""
        sp = self.comp_parent[comp]
        out: list[int] = []
        for child in sp.child_nodes:
            if child.live_comp == comp:
                continue
            out.extend(self.materialize(child))
        for cid in sp.child_comps:
            if cid != comp:
                out.extend(self.tracker.comp_vertices[cid])
        return out
