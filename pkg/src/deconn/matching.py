"""Unique perfect matching via decremental 2-edge-connectivity.

The driver repeats: if some active component has odd size there is no
perfect matching; otherwise ask for a bridge.  No bridge means no unique
matching (a graph with a unique perfect matching has a bridge), and a
maximum-matching check on the bridgeless remainder separates "several
matchings" from "none".  A bridge (u, v) is removed; if the two resulting
components are odd the edge is forced into the matching and all other
edges at u and v are removed through the same decremental structure.

The decremental structure is Monte-Carlo, so the whole computation is
wrapped Las-Vegas style: rerun with fresh randomness until the final
self-check passes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import networkx as nx

from .engine import CertificateParams
from .frontend import DecrementalConnectivity
from .graph import DynamicGraph, load


class MatchingRetryError(RuntimeError):
    """All reruns tripped the self-check; statistically (almost) impossible."""


class _RunCorrupt(Exception):
    """Mid-run inconsistency that only a wrong certificate can produce."""


@dataclass(frozen=True)
class MatchingResult:
    status: str               # "unique" | "not_unique" | "no_perfect_matching"
    matching: tuple | None    # edge ids when status == "unique"
    attempts: int


def _residual_has_perfect_matching(g: DynamicGraph, active: list[int]) -> bool:
    h = nx.Graph()
    h.add_nodes_from(active)
    act = set(active)
    for e in range(g.m):
        if g.alive[e]:
            u, v = g.endpoints(e)
            if u in act and v in act:
                h.add_edge(u, v)
    mm = nx.max_weight_matching(h, maxcardinality=True)
    return 2 * len(mm) == len(active)


def _drive(g: DynamicGraph, d: DecrementalConnectivity) -> MatchingResult:
    n = g.n
    matched = [False] * n
    forced: list[int] = []

    def odd_active_exists(comp_ids) -> bool:
        for cid in comp_ids:
            size = d.connected_size_of(cid)
            if size % 2 == 0:
                continue
            members = d.conn.comp_vertices[cid]
            if size == 1 and matched[next(iter(members))]:
                continue
            return True
        return False

    if odd_active_exists(d.conn.component_ids()):
        return MatchingResult("no_perfect_matching", None, 0)

    heap: list[int] = []
    consumed = 0

    def refill():
        nonlocal consumed
        while consumed < len(d.bridge_log):
            heapq.heappush(heap, d.bridge_log[consumed].edge)
            consumed += 1

    def next_bridge() -> int | None:
        refill()
        while heap:
            e = heap[0]
            if g.alive[e]:
                return e
            heapq.heappop(heap)
        return None

    def delete_checked(e: int) -> bool:
        """Delete through the structure; True if no perfect matching remains.

        Parity is re-checked on the connectivity components the deletion
        touched (in c=2 mode the returned notifications describe 2ec splits,
        so the connectivity split log is consulted directly).
        """
        pre = len(d.conn.split_log)
        d.delete(e)
        touched = set()
        for ev in d.conn.split_log[pre:]:
            touched.add(ev.j)
            touched.add(ev.new_id)
        return odd_active_exists(sorted(touched))

    while True:
        e = next_bridge()
        if e is None:
            active = [v for v in range(n) if not matched[v]]
            if not active:
                return MatchingResult("unique", tuple(sorted(forced)), 0)
            if _residual_has_perfect_matching(g, active):
                return MatchingResult("not_unique", None, 0)
            return MatchingResult("no_perfect_matching", None, 0)
        u, v = g.endpoints(e)
        # removing the candidate bridge is parity-neutral by itself: odd
        # sides here mean the edge is forced, not that no matching exists
        d.delete(e)
        su = d.connected_size_of(d.connected_component_of(u))
        sv = d.connected_size_of(d.connected_component_of(v))
        if (su % 2) != (sv % 2):
            # an even component never splits into odd plus even; the
            # certificate must be wrong, so rerun with fresh randomness
            raise _RunCorrupt
        if su % 2 == 1:
            # both sides odd: the bridge is in every perfect matching
            forced.append(e)
            matched[u] = True
            matched[v] = True
            for w in (u, v):
                for inc in list(g.adj[w]):
                    if g.alive[inc] and delete_checked(inc):
                        return MatchingResult("no_perfect_matching", None, 0)
        # even sides: the bridge is in no perfect matching; nothing else to do


def unique_perfect_matching(n: int, edges, seed: int = 0,
                            params: CertificateParams | None = None,
                            retry_cap: int = 8) -> MatchingResult:
    """Decide unique perfect matching, Las-Vegas: rerun until the
    self-check passes, so the returned verdict is always correct.
    """
    edges = [tuple(e) for e in edges]
    for attempt in range(retry_cap):
        g = load(n, edges)
        d = DecrementalConnectivity(
            g, c=2, seed=(seed * 0x9E3779B9 + attempt) & (2**63 - 1),
            params=params)
        try:
            result = _drive(g, d)
        except _RunCorrupt:
            continue
        if d.finalize().passed:
            return MatchingResult(result.status, result.matching, attempt + 1)
    raise MatchingRetryError(f"self-check failed {retry_cap} times in a row")
