"""Decremental maintenance of a sparse c-connectivity certificate.

The structure keeps ell+1 levels.  Level i owns two edge sets:

* ``core(i)``: the surviving part of a cumulative pairwise-independent
  sample, pruned so that every connected component is c-edge-connected;
* ``pool(i)``: the edges still eligible at level i; ``pool(0)`` starts as
  the whole graph and each level's pool shrinks by boundary pruning.

Whenever a component of ``core(i)`` has a nonempty boundary of fewer than
``delta`` pool(i) edges, that boundary is moved to the ``fringe`` set and
deleted from level i and everything below it.  The emitted certificate is
``core(ell) | fringe``: the sparse cores witness connectivity inside their
components and the fringe carries every edge between them.

Boundaries against the top pool are tracked Monte-Carlo style with a probe
sample (size classification) and the XOR sketch (contents), exactly so the
per-edge cost stays constant; boundaries against ``pool(i) \\ pool(ell)``
are small and kept exact.  A wrong sketch answer is stored as-is and left
to the self-check; with the completion fallback enabled (default), any
surviving cross-component top-pool edge is swept into the fringe at the end
of each update, which turns sampling misfortunes into measurable churn
instead of wrong answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .boundaries import ExactBoundary, SmallBoundaryFamily
from .cuts import cut_oracle_naive
from .graph import DynamicGraph, GraphError
from .randstreams import (
    TAG_BUCKETS,
    TAG_FINGERPRINTS,
    TAG_LEVEL_SAMPLING,
    TAG_PROBE,
    TAG_TRACKER,
    MasterSeed,
    bernoulli_ids,
    pairwise_gen,
)
from .sketch import XorBoundarySketch
from .tracker import ComponentTracker


def _log2ceil(n: int) -> int:
    return max(1, math.ceil(math.log2(max(n, 2))))


@dataclass(frozen=True)
class CertificateParams:
    """Tunables for the level structure.

    ``delta`` must exceed ``c``.  The probabilistic guarantees additionally
    want ``p * ell < 1`` and ``p * delta >= 32 * c``; the defaults satisfy
    them and ``is_calibrated`` reports whether explicit values do.  The
    historical ``12c`` threshold variant is available for experiments.
    """

    c: int
    ell: int
    p: float
    delta: int
    q: float
    gamma: int = 2
    z: int = 4

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("c must be >= 1")
        if self.delta <= self.c:
            raise ValueError("delta must exceed c")
        if not (0.0 < self.p <= 1.0):
            raise ValueError("p must be in (0, 1]")
        if not (0.0 < self.q <= 1.0):
            raise ValueError("q must be in (0, 1]")
        if self.ell < 1:
            raise ValueError("need at least one sampling level")
        if self.gamma < 1:
            raise ValueError("gamma must be >= 1")

    def is_calibrated(self) -> bool:
        return self.p * self.ell < 1.0 and self.p * self.delta >= 32 * self.c

    @staticmethod
    def defaults(n: int, c: int, *, z: int = 4, p: float | None = None,
                 delta: int | None = None, ell: int | None = None,
                 q: float | None = None, gamma: int = 2,
                 delta_variant: str = "32c") -> "CertificateParams":
        lg = _log2ceil(n)
        if ell is None:
            ell = max(1, z * lg)
        if p is None:
            p = min(1.0 / lg**3, 1.0 / (ell + 1))
        if delta is None:
            if delta_variant == "32c":
                delta = math.ceil(32 * c / p)
            elif delta_variant == "12c":
                delta = math.ceil(12 * c / p)
            else:
                raise ValueError(f"unknown delta variant {delta_variant!r}")
        if q is None:
            q = 1.0 / lg**2
        return CertificateParams(c=c, ell=ell, p=p, delta=delta, q=q,
                                 gamma=gamma, z=z)

    def bucket_count(self, n: int) -> int:
        lg = _log2ceil(n)
        return min(max(1, self.delta * lg * lg), max(n, 1))


@dataclass(frozen=True)
class CertificateDelta:
    """Net certificate change of one update, deletions before insertions."""
    update_index: int
    deleted_edge: int
    removed: tuple
    inserted: tuple


@dataclass
class SelfCheckReport:
    passed: bool
    first_bad_edge: int | None = None
    first_bad_update: int | None = None
    reason: str | None = None


@dataclass
class EngineCounters:
    boundary_prune_edges: list = field(default_factory=list)  # per level
    boundary_prune_events: list = field(default_factory=list)
    cut_pruned: list = field(default_factory=list)
    fallback_insertions: int = 0
    cert_insertions: int = 0
    stored_boundary_edges: int = 0
    stored_ref_insertions: int = 0
    oracle_queries: int = 0
    cert_size_trace: list = field(default_factory=list)


class CertificateEngine:
    """Levelled certificate of a decremental graph with a final self-check."""

    def __init__(self, g: DynamicGraph, params: CertificateParams, seed: int = 0,
                 auto_fallback: bool = True):
        self.g = g
        self.params = params
        self.auto_fallback = auto_fallback
        self.seeds = MasterSeed(seed)
        n, m = g.n, g.m
        P = params
        self.ell = P.ell
        self.update_index = 0

        # cumulative level samples; with p = 1 every level holds all edges
        draw = m if P.p >= 1.0 else min(m, math.ceil(P.p * m))
        self.sample_sets: list[set[int]] = [set()]
        acc: set[int] = set()
        for i in range(1, self.ell + 1):
            if m > 0:
                if P.p >= 1.0:
                    acc |= set(range(m))
                else:
                    gen = pairwise_gen(self.seeds.generator(TAG_LEVEL_SAMPLING, i), m, draw)
                    acc |= set(gen.values())
            self.sample_sets.append(set(acc))

        self.pool_level = np.full(m, self.ell, dtype=np.int64)
        self.in_fringe = np.zeros(m, dtype=bool)
        self.in_core_top = np.zeros(m, dtype=bool)

        probe_mask = bernoulli_ids(self.seeds.generator(TAG_PROBE), m, P.q) if m else \
            np.zeros(0, dtype=bool)
        self.probe: set[int] = {int(e) for e in np.flatnonzero(probe_mask)}

        self.sketch = XorBoundarySketch(
            n, P.bucket_count(n), P.gamma,
            self.seeds.generator(TAG_BUCKETS),
            self.seeds.child_seed(TAG_FINGERPRINTS),
            endpoints=g.endpoints)
        for e in range(m):
            self.sketch.insert(e)

        self.core: list[set[int]] = []
        self.tr: list[ComponentTracker] = []
        self.cut = []
        self.delta_b: list[ExactBoundary] = []
        self.probe_b: list[ExactBoundary] = []
        self.family: list[SmallBoundaryFamily] = []
        self.pending: list[set[int]] = []
        for i in range(self.ell + 1):
            core_i = set(self.sample_sets[i])
            self.core.append(core_i)
            tri = ComponentTracker(
                n, [(e, *g.endpoints(e)) for e in sorted(core_i)],
                seed=self.seeds.child_seed(TAG_TRACKER, i))
            self.tr.append(tri)
            self.cut.append(cut_oracle_naive(P.c, tri))
            self.delta_b.append(ExactBoundary(tri, g.endpoints))
            pb = ExactBoundary(tri, g.endpoints)
            for e in sorted(self.probe):
                pb.insert(e)
            self.probe_b.append(pb)
            self.family.append(SmallBoundaryFamily(n, tri))
            self.pending.append(set())
        for e in self.core[self.ell]:
            self.in_core_top[e] = True

        self.stored_refs: dict[int, list] = {}
        self._probe_threshold = 2.0 * P.q * P.delta
        self._init_classified = [False] * (self.ell + 1)

        c = EngineCounters()
        c.boundary_prune_edges = [0] * (self.ell + 1)
        c.boundary_prune_events = [0] * (self.ell + 1)
        c.cut_pruned = [0] * (self.ell + 1)
        self.counters = c

        self._report = SelfCheckReport(passed=True)
        self._tamper_at: set[int] = set()
        self._tampered_edges: list[int] = []

        self._stabilize([])
        self._prev_qtop = self.tr[self.ell].q.copy()
        self._cert_prev = self.certificate_mask()
        self.counters.cert_size_trace.append(int(self._cert_prev.sum()))

    # ------------------------------------------------------------------
    # mask views

    def certificate_mask(self) -> np.ndarray:
        return self.g.alive & (self.in_fringe | self.in_core_top)

    def certificate_edges(self) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.certificate_mask())]

    def pool_edges(self, i: int) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.g.alive & (self.pool_level >= i))]

    def core_edges(self, i: int) -> list[int]:
        return sorted(self.core[i])

    def fringe_edges(self) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.g.alive & self.in_fringe)]

    # ------------------------------------------------------------------
    # internal bookkeeping

    def _gl_departure(self, e: int) -> None:
        """Edge ``e`` stops being a top-pool member (still alive or dying)."""
        self.sketch.delete(e)
        if e in self.probe:
            for i in range(self.ell + 1):
                affected = self.probe_b[i].delete(e)
                for comp in affected:
                    if (not self.family[i].is_stored(comp)
                            and self.probe_b[i].size_of(comp) <= self._probe_threshold):
                        self._become_small(i, comp)
        refs = self.stored_refs.pop(e, None)
        if refs:
            for i, node in refs:
                node.stored.discard(e)
                if node.live_comp is not None:
                    self.pending[i].add(node.live_comp)

    def _demote(self, e: int, at_level: int) -> None:
        """Move ``e`` out of pools at_level..ell and into the fringe."""
        old_pl = int(self.pool_level[e])
        if old_pl < at_level:
            return
        self.in_fringe[e] = True
        self.pool_level[e] = at_level - 1
        if old_pl == self.ell:
            self._gl_departure(e)
            for k in range(at_level):
                self.delta_b[k].insert(e)
        else:
            for k in range(at_level, old_pl + 1):
                for comp in self.delta_b[k].delete(e):
                    self.pending[k].add(comp)

    def _classify(self, i: int, comp: int) -> None:
        if self.family[i].is_stored(comp):
            return
        if self.probe_b[i].size_of(comp) <= self._probe_threshold:
            self._become_small(i, comp)

    def _become_small(self, i: int, comp: int) -> None:
        """Component classified small: fetch and store its top-pool boundary.

        Small components are queried directly; a fragment bigger than half
        its stored parent is derived from the parent's stored boundary and a
        query on its siblings, so query cost follows the halving side.
        The sketch answer may be wrong; it is stored regardless and any
        consequence is left for the self-check to flag.
        """
        fam = self.family[i]
        sp = fam.strict_parent(comp)
        csize = self.tr[i].component_size(comp)
        self.counters.oracle_queries += 1
        if 2 * csize <= sp.size:
            bnd = set(self.sketch.find_boundary(self.tr[i].component_vertices(comp)))
        else:
            sib = fam.sibling_vertices(comp)
            qbnd = set(self.sketch.find_boundary(sib)) if sib else set()
            bnd = set(sp.stored) ^ qbnd
        node = fam.attach(comp, bnd)
        for e in bnd:
            self.stored_refs.setdefault(e, []).append((i, node))
        self.counters.stored_boundary_edges += len(bnd)
        self.counters.stored_ref_insertions += len(bnd)
        self.pending[i].add(comp)

    def _handle_split(self, i: int, ev) -> None:
        self.delta_b[i].on_split(ev)
        self.probe_b[i].on_split(ev)
        self.family[i].on_split(ev)
        self._classify(i, ev.j)
        self._classify(i, ev.new_id)

    def _execute_prune(self, i: int, comp: int, out: list[int]) -> None:
        node = self.family[i].node_of(comp)
        if node is None:
            return
        both = self.delta_b[i].list_of(comp) | node.stored
        total = len(both)
        if not (0 < total < self.params.delta):
            return
        batch = sorted(both)
        self.counters.boundary_prune_edges[i] += total
        self.counters.boundary_prune_events[i] += 1
        for e in batch:
            self._demote(e, i)
            out.append(e)

    def _pass(self, removal_list: list[int], done: list[int]) -> None:
        for i in range(self.ell + 1):
            j = done[i]
            while j < len(removal_list):
                e = removal_list[j]
                j += 1
                if e in self.core[i]:
                    self.core[i].discard(e)
                    if i == self.ell:
                        self.in_core_top[e] = False
                    ev = self.tr[i].delete(e)
                    if ev is not None:
                        self._handle_split(i, ev)
            done[i] = j
            if self.params.c >= 2 and self.core[i]:
                oracle = self.cut[i]
                while True:
                    geid = oracle.find_edge_on_small_cut()
                    if geid is None:
                        break
                    self.core[i].discard(geid)
                    if i == self.ell:
                        self.in_core_top[geid] = False
                    ev = self.tr[i].delete(geid)
                    oracle.consume(geid)
                    self.counters.cut_pruned[i] += 1
                    if ev is not None:
                        self._handle_split(i, ev)
            if not self._init_classified[i]:
                self._init_classified[i] = True
                for comp in self.tr[i].component_ids():
                    self._classify(i, comp)
            pend = self.pending[i]
            while pend:
                comp = min(pend)
                pend.discard(comp)
                self._execute_prune(i, comp, removal_list)

    def _fallback_candidates(self) -> list[int]:
        qtop = self.tr[self.ell].q
        live_top = self.g.alive & (self.pool_level == self.ell)
        ids = np.flatnonzero(live_top)
        if len(ids) == 0:
            return []
        crossing = qtop[self.g.eu[ids]] != qtop[self.g.ev[ids]]
        return [int(e) for e in ids[crossing]]

    def _stabilize(self, removal_list: list[int]) -> None:
        done = [0] * (self.ell + 1)
        while True:
            self._pass(removal_list, done)
            if any(self.pending[i] for i in range(self.ell + 1)):
                continue
            if not self.auto_fallback:
                break
            fb = self._fallback_candidates()
            if not fb:
                break
            self.counters.fallback_insertions += len(fb)
            for e in sorted(fb):
                self._demote(e, self.ell)

    # ------------------------------------------------------------------
    # public operations

    def delete(self, e: int) -> CertificateDelta:
        """Delete edge ``e`` from the graph and cascade the level structure.

        Runs the two self-check guards: the deleted edge must have been in
        the certificate if its endpoints were in distinct top components,
        and every edge entering the certificate must have had its endpoints
        in one top component before this deletion.
        """
        if not (0 <= e < self.g.m) or not self.g.alive[e]:
            raise GraphError(f"edge {e} is not alive")
        self.update_index += 1
        u, v = self.g.endpoints(e)
        pq = self._prev_qtop
        if pq[u] != pq[v] and not self._cert_prev[e]:
            self._flag(e, "missing-at-delete")

        self.g.delete(e)
        old_pl = int(self.pool_level[e])
        if self.in_fringe[e]:
            self.in_fringe[e] = False
        if old_pl == self.ell:
            self._gl_departure(e)
        else:
            for k in range(old_pl + 1):
                for comp in self.delta_b[k].delete(e):
                    self.pending[k].add(comp)
        self.pool_level[e] = -1

        removal_list = [e]
        self._stabilize(removal_list)

        if self.update_index in self._tamper_at:
            self._apply_tamper()

        cur = self.certificate_mask()
        removed = [int(x) for x in np.flatnonzero(self._cert_prev & ~cur)]
        inserted = [int(x) for x in np.flatnonzero(cur & ~self._cert_prev)]
        for f in inserted:
            fu, fv = self.g.endpoints(f)
            if pq[fu] != pq[fv]:
                self._flag(f, "late-insertion")
        self.counters.cert_insertions += len(inserted)
        self.counters.cert_size_trace.append(int(cur.sum()))
        self._cert_prev = cur
        self._prev_qtop = self.tr[self.ell].q.copy()
        return CertificateDelta(self.update_index, e, tuple(removed), tuple(inserted))

    def completion_fallback(self) -> list[int]:
        """Append to the fringe every alive top-pool edge joining distinct
        top components, and return them.

        With ``auto_fallback`` on this is already done after every update
        and the result is empty; with it off this completes an emitted
        certificate on demand.
        """
        fb = sorted(self._fallback_candidates())
        if fb:
            self.counters.fallback_insertions += len(fb)
            for e in fb:
                self._demote(e, self.ell)
            self._stabilize([])
            cur = self.certificate_mask()
            self.counters.cert_insertions += int(np.count_nonzero(cur & ~self._cert_prev))
            self._cert_prev = cur
        return fb

    def self_check(self) -> SelfCheckReport:
        """Final sweep: every remaining cross-component edge must be in the
        certificate.  Passing guarantees no emitted certificate was ever
        missing a required edge, hence no query was answered incorrectly.
        """
        if self._report.passed:
            qtop = self.tr[self.ell].q
            cert = self.certificate_mask()
            ids = np.flatnonzero(self.g.alive)
            bad = ids[(qtop[self.g.eu[ids]] != qtop[self.g.ev[ids]]) & ~cert[ids]]
            if len(bad):
                self._flag(int(bad[0]), "missing-at-finalize")
        return self._report

    def _flag(self, e: int, reason: str) -> None:
        if self._report.passed:
            self._report = SelfCheckReport(
                passed=False, first_bad_edge=int(e),
                first_bad_update=self.update_index, reason=reason)

    # ------------------------------------------------------------------
    # fault injection and debugging aids

    def tamper_at(self, update_index: int) -> None:
        """Schedule a fault: silently drop one required certificate edge.

        The dropped edge joins distinct top components at drop time, so a
        sound self-check must eventually flag the run.
        """
        self._tamper_at.add(update_index)

    def _apply_tamper(self) -> None:
        qtop = self.tr[self.ell].q
        ids = np.flatnonzero(self.g.alive & self.in_fringe)
        cand = ids[qtop[self.g.eu[ids]] != qtop[self.g.ev[ids]]]
        if len(cand) == 0:
            # nothing crossing yet; retry at the next update
            self._tamper_at.add(self.update_index + 1)
            return
        e = int(cand[0])
        self.in_fringe[e] = False
        self._tampered_edges.append(e)

    def checkpoint_dump(self) -> str:
        """Canonical text of all level sets, for golden-file diffs."""
        lines = []
        for i in range(self.ell + 1):
            lines.append(f"level {i}")
            lines.append("core: " + " ".join(str(e) for e in sorted(self.core[i])))
            lines.append("pool: " + " ".join(str(e) for e in self.pool_edges(i)))
        lines.append("fringe: " + " ".join(str(e) for e in self.fringe_edges()))
        return "\n".join(lines) + "\n"

    # convenience for tests and the frontend
    def top_component_labels(self) -> np.ndarray:
        return self.tr[self.ell].q.copy()

    def flagged(self) -> bool:
        return not self._report.passed
