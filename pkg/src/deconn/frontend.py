"""User-facing decremental connectivity (c=1) and 2-edge-connectivity (c=2).

Queries are answered from component trackers running over the live
certificate, never from the certificate's internals, so an adaptive caller
learns component ids, sizes, ordered member lists, split notifications and
bridges, and nothing about the sampling.

Certificate deltas are applied insertions first.  An edge enters the
certificate only when its endpoints were in one top component before the
triggering deletion, hence they are still connected in the pre-delta
tracker graph; applying deletions first would violate that for an edge
whose parallel companion is being removed in the same update.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cuts import cut_oracle_naive
from .engine import CertificateEngine, CertificateParams, SelfCheckReport
from .graph import DynamicGraph, GraphError
from .tracker import ComponentTracker, TrackerError


@dataclass(frozen=True)
class SplitNotification:
    old_id: int
    new_id: int
    vertices: tuple  # moved vertices, ascending


@dataclass(frozen=True)
class BridgeEvent:
    update_index: int
    edge: int


class DecrementalConnectivity:
    """Constant-time same-component queries under edge deletions.

    ``c=1`` tracks connected components; ``c=2`` tracks 2-edge-connected
    components, reports bridges as they appear, and serves plain
    connectivity as well (the certificate works for both orders).
    """

    def __init__(self, g: DynamicGraph, c: int, params: CertificateParams | None = None,
                 seed: int = 0, keep_log: bool = False, auto_fallback: bool = True):
        if c not in (1, 2):
            raise ValueError("supported connectivity orders are 1 and 2")
        self.c = c
        self.g = g
        if params is None:
            params = CertificateParams.defaults(g.n, c)
        if params.c != c:
            raise ValueError("params were built for a different connectivity order")
        self.engine = CertificateEngine(g, params, seed=seed, auto_fallback=auto_fallback)
        cert = [(e, *g.endpoints(e)) for e in self.engine.certificate_edges()]
        self.conn = ComponentTracker(g.n, cert, seed=self.engine.seeds.child_seed(91))
        self.twoec: ComponentTracker | None = None
        self._pruned: set[int] = set()
        self._reported: set[int] = set()
        self.bridge_log: list[BridgeEvent] = []
        self.update_index = 0
        self.query_comparisons = 0
        self.log_lines: list[str] | None = [] if keep_log else None
        if c == 2:
            self.twoec = ComponentTracker(g.n, cert, seed=self.engine.seeds.child_seed(92))
            self._cut = cut_oracle_naive(2, self.twoec)
            self._prune_bridges()
            if self.log_lines is not None:
                # prologue: splits and bridges of the initial pruning, so a
                # replay can reconstruct component ids from the connected
                # components of the input graph
                for ev in self.twoec.split_log:
                    vs = " ".join(str(v) for v in ev.vertices)
                    self.log_lines.append(
                        f"SPLIT {ev.j} {ev.new_id} {len(ev.vertices)} {vs}")
                for be in self.bridge_log:
                    self.log_lines.append(f"BRIDGE {be.edge}")

    # -- the public component notion: connectivity for c=1, 2ec for c=2

    def _notion(self) -> ComponentTracker:
        return self.twoec if self.c == 2 else self.conn

    def same_component(self, u: int, v: int) -> bool:
        self.query_comparisons += 1
        tr = self._notion()
        return bool(tr.q[u] == tr.q[v])

    def component_of(self, v: int) -> int:
        return self._notion().component_id(v)

    def size_of(self, cid: int) -> int:
        return self._notion().component_size(cid)

    def component_vertices(self, cid: int) -> list[int]:
        return self._notion().component_vertices(cid)

    def component_labels(self) -> np.ndarray:
        return self._notion().q.copy()

    # connectivity surface, meaningful in both modes
    def same_connected(self, u: int, v: int) -> bool:
        self.query_comparisons += 1
        return bool(self.conn.q[u] == self.conn.q[v])

    def connected_component_of(self, v: int) -> int:
        return self.conn.component_id(v)

    def connected_size_of(self, cid: int) -> int:
        return self.conn.component_size(cid)

    def connected_labels(self) -> np.ndarray:
        return self.conn.q.copy()

    def non_component_edges(self) -> list[int]:
        """Alive edges whose endpoints carry distinct component ids."""
        q = self._notion().q
        ids = np.flatnonzero(self.g.alive)
        cross = q[self.g.eu[ids]] != q[self.g.ev[ids]]
        return [int(e) for e in ids[cross]]

    def current_bridges(self) -> list[int]:
        if self.c != 2:
            raise GraphError("bridge reporting is a 2-edge-connectivity feature")
        return [e for e in sorted(self._reported) if self.g.alive[e]]

    # -- updates

    def delete(self, e: int) -> list[SplitNotification]:
        """Delete an edge; returns split notifications of the public notion."""
        self.update_index += 1
        delta = self.engine.delete(e)
        notion = self._notion()
        log_start = len(notion.split_log)
        bridge_start = len(self.bridge_log)

        for f in delta.inserted:
            fu, fv = self.g.endpoints(f)
            self._insert_conn(f, fu, fv)
            if self.twoec is not None:
                self._insert_twoec(f, fu, fv)
        for d in delta.removed:
            if self.conn.has_edge(d):
                self.conn.delete(d)
            if self.twoec is not None:
                if d in self._pruned:
                    self._pruned.discard(d)
                elif self.twoec.has_edge(d):
                    self.twoec.delete(d)
        if self.twoec is not None:
            self._prune_bridges()

        notes = [SplitNotification(ev.j, ev.new_id, ev.vertices)
                 for ev in notion.split_log[log_start:]]
        if self.log_lines is not None:
            self.log_lines.append(f"DEL {e}")
            for nt in notes:
                vs = " ".join(str(v) for v in nt.vertices)
                self.log_lines.append(
                    f"SPLIT {nt.old_id} {nt.new_id} {len(nt.vertices)} {vs}")
            for be in self.bridge_log[bridge_start:]:
                self.log_lines.append(f"BRIDGE {be.edge}")
        return notes

    def _insert_conn(self, f: int, fu: int, fv: int) -> None:
        try:
            self.conn.insert(f, fu, fv)
        except TrackerError:
            # only reachable after the engine flagged the run; keep going so
            # the flagged run still terminates deterministically
            if not self.engine.flagged():
                raise

    def _insert_twoec(self, f: int, fu: int, fv: int) -> None:
        tw = self.twoec
        if tw.q[fu] != tw.q[fv]:
            # joins two 2ec components: it is a bridge on arrival
            self._pruned.add(f)
            self._report_bridge(f)
        else:
            tw.insert(f, fu, fv)

    def _prune_bridges(self) -> None:
        tw = self.twoec
        while True:
            b = self._cut.find_edge_on_small_cut()
            if b is None:
                return
            tw.delete(b)
            self._cut.consume(b)
            self._pruned.add(b)
            self._report_bridge(b)

    def _report_bridge(self, eid: int) -> None:
        if eid not in self._reported:
            self._reported.add(eid)
            self.bridge_log.append(BridgeEvent(self.update_index, eid))

    def finalize(self) -> SelfCheckReport:
        """Run the remaining-edges self-check sweep and report."""
        return self.engine.self_check()

    def event_log_text(self) -> str:
        if self.log_lines is None:
            raise GraphError("structure was built without keep_log")
        return "\n".join(self.log_lines) + ("\n" if self.log_lines else "")
