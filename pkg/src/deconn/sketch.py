"""Bucketed XOR fingerprint sketch for sublinear boundary queries.

Edges are hashed into s buckets; each vertex keeps, per bucket, the XOR of
the fingerprints of its alive incident edges in that bucket.  XOR-ing a
query set's vertex rows cancels every edge with both endpoints inside the
set, so a nonzero bucket certainly holds a boundary edge (soundness is
unconditional), and a bucket that does hold boundary edges reads zero only
if their fingerprints cancel, which happens with probability 2^-bits.

Queries are Monte-Carlo: a miss silently omits one bucket's boundary edges.
No failure is signalled here; consumers detect consequences downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .randstreams import fingerprint, fingerprint_bits


@dataclass
class QueryStats:
    queries: int = 0
    buckets_hit_last: int = 0
    examined_last: int = 0          # adjacency entries touched in hit buckets
    internal_last: int = 0          # distinct non-boundary edges examined
    boundary_last: int = 0
    trace: list = field(default_factory=list)


class SketchError(ValueError):
    pass


class XorBoundarySketch:
    """Per-vertex, per-bucket XOR fingerprints over a dynamic edge set."""

    def __init__(self, n: int, s: int, gamma: int, bucket_rng: np.random.Generator,
                 fp_seed: int, endpoints):
        if s < 1:
            raise SketchError("bucket count must be >= 1")
        if s > max(n, 1):
            raise SketchError("bucket count must be at most n")
        self.n = n
        self.s = s
        self.gamma = gamma
        self.bits = fingerprint_bits(n, gamma)
        if self.bits > 64:
            raise SketchError("fingerprints wider than one machine word are not packed")
        self._endpoints = endpoints
        self.x = np.zeros((n, s), dtype=np.uint64)
        self._fp_seed = fp_seed
        self._bucket_rng = bucket_rng
        self.bucket: dict[int, int] = {}
        self.fp: dict[int, int] = {}
        self.adj: list[dict[int, set[int]]] = [dict() for _ in range(n)]
        self.present: set[int] = set()
        self.stats = QueryStats()

    def _assign(self, e: int) -> tuple[int, int]:
        if e not in self.bucket:
            self.bucket[e] = int(self._bucket_rng.integers(self.s))
            self.fp[e] = fingerprint(self._fp_seed, e, self.gamma, self.n)
        return self.bucket[e], self.fp[e]

    def insert(self, e: int) -> None:
        if e in self.present:
            raise SketchError(f"edge {e} already in sketch")
        self.present.add(e)
        b, f = self._assign(e)
        u, v = self._endpoints(e)
        self.x[u, b] ^= np.uint64(f)
        self.x[v, b] ^= np.uint64(f)
        self.adj[u].setdefault(b, set()).add(e)
        self.adj[v].setdefault(b, set()).add(e)

    def delete(self, e: int) -> None:
        if e not in self.present:
            raise SketchError(f"edge {e} not in sketch")
        self.present.discard(e)
        b, f = self.bucket[e], self.fp[e]
        u, v = self._endpoints(e)
        self.x[u, b] ^= np.uint64(f)
        self.x[v, b] ^= np.uint64(f)
        self.adj[u][b].discard(e)
        if not self.adj[u][b]:
            del self.adj[u][b]
        self.adj[v][b].discard(e)
        if not self.adj[v][b]:
            del self.adj[v][b]

    def buckets_hit(self, S) -> list[int]:
        """Bucket indices whose XOR over S is nonzero; O(|S| * s) word XORs."""
        rows = self.x[list(S)]
        if rows.shape[0] == 0:
            return []
        y = np.bitwise_xor.reduce(rows, axis=0)
        return [int(i) for i in np.flatnonzero(y)]

    def find_boundary(self, S) -> list[int]:
        """Edges with one endpoint in S, whp; sorted by edge id.

        Scans only hit buckets within S's adjacency, so the work is
        proportional to the candidate edges in those buckets plus the
        O(|S| s) bucket test.
        """
        S_list = list(S)
        sset = set(S_list)
        hit = set(self.buckets_hit(S_list))
        st = self.stats
        st.queries += 1
        st.buckets_hit_last = len(hit)
        examined = 0
        internal = 0
        out: list[int] = []
        for v in S_list:
            av = self.adj[v]
            use = hit.intersection(av.keys()) if len(hit) < len(av) else \
                [b for b in av if b in hit]
            for b in use:
                for e in av[b]:
                    examined += 1
                    u, w = self._endpoints(e)
                    other = w if u == v else u
                    if other in sset:
                        # internal edges are met from both endpoints; count once
                        if v == u:
                            internal += 1
                    else:
                        out.append(e)
        st.examined_last = examined
        st.internal_last = internal
        st.boundary_last = len(out)
        return sorted(out)
