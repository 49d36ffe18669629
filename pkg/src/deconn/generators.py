"""Seeded graph generators for tests and the benchmark harness."""

from __future__ import annotations

import numpy as np

from .graph import DynamicGraph, GraphError, load


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_gnm(n: int, m: int, seed: int) -> DynamicGraph:
    """m uniform random non-loop pairs, sampled with replacement.

    Parallel edges are intentional: ids, not endpoint pairs, identify edges
    everywhere downstream.
    """
    if n < 2 and m > 0:
        raise GraphError("need at least two vertices to place edges")
    rng = _rng(seed)
    edges = []
    for _ in range(m):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        edges.append((u, v))
    return load(n, edges)


def gen_gnp(n: int, p: float, seed: int) -> DynamicGraph:
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return load(n, edges)


def gen_stress(n: int, seed: int) -> DynamicGraph:
    """G(n, 2/n): sparse random graphs whose sampled halves leave big
    components with many edges between them; the family that motivates
    pruning by boundary size rather than by cut size."""
    return gen_gnp(n, min(1.0, 2.0 / max(n, 1)), seed)


def gen_dumbbell(k: int, seed: int = 0) -> DynamicGraph:
    """Two k-cliques joined by a single bar edge (the bar is the last id)."""
    edges = []
    for u in range(k):
        for v in range(u + 1, k):
            edges.append((u, v))
    for u in range(k, 2 * k):
        for v in range(u + 1, 2 * k):
            edges.append((u, v))
    edges.append((0, k))
    return load(2 * k, edges)


def gen_grid(rows: int, cols: int) -> DynamicGraph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return load(rows * cols, edges)


def gen_min_degree(n: int, degree_target: int, rich_fraction: float, seed: int) -> DynamicGraph:
    """Random multigraph where a ``rich_fraction`` of vertices gets
    ``degree_target`` incident edges via random pairing (no self-loops)."""
    rng = _rng(seed)
    rich = max(0, min(n, int(round(rich_fraction * n))))
    stubs = []
    for v in range(rich):
        stubs.extend([v] * degree_target)
    edges = []
    stubs = list(rng.permutation(stubs))
    while len(stubs) >= 2:
        u = int(stubs.pop())
        v = int(stubs.pop())
        if u == v:
            if stubs:
                w = int(stubs.pop())
                if w != u:
                    edges.append((u, w))
            continue
        edges.append((u, v))
    return load(n, edges)


def gen_connected(n: int, m: int, seed: int) -> DynamicGraph:
    """Connected graph: random spanning tree plus m-(n-1) extra edges."""
    if m < n - 1:
        raise GraphError("too few edges for a connected graph")
    rng = _rng(seed)
    edges = []
    order = list(rng.permutation(n))
    for i in range(1, n):
        j = int(rng.integers(i))
        edges.append((order[i], order[j]))
    for _ in range(m - (n - 1)):
        u = int(rng.integers(n))
        v = int(rng.integers(n - 1))
        if v >= u:
            v += 1
        edges.append((u, v))
    return load(n, edges)


def gen_multi_complete(n: int, copies: int) -> DynamicGraph:
    """Complete graph with every pair repeated ``copies`` times; its edge
    connectivity is copies*(n-1), handy for high-connectivity tests."""
    edges = []
    for _ in range(copies):
        for u in range(n):
            for v in range(u + 1, n):
                edges.append((u, v))
    return load(n, edges)


GENERATORS = {"gnm", "gnp", "dumbbell", "grid", "stress"}


def from_name(name: str, n: int, m: int, seed: int) -> DynamicGraph:
    """Benchmark-facing dispatch; gnp uses m as a per-mille density."""
    if name == "gnm":
        return gen_gnm(n, m, seed)
    if name == "gnp":
        return gen_gnp(n, m / 1000.0, seed)
    if name == "stress":
        return gen_stress(n, seed)
    if name == "dumbbell":
        return gen_dumbbell(max(2, n // 2))
    if name == "grid":
        side = max(1, int(round(n ** 0.5)))
        return gen_grid(side, side)
    raise GraphError(f"unknown generator {name!r}")


def matching_corpus(limit: int, seed: int = 0):
    """Connected graphs with n <= 10 and m <= 14 for matching verification.

    All connected graphs on up to 4 vertices (by edge subset), then seeded
    random connected graphs up to the limit.  Yields (n, edge_list).
    """
    import itertools
    count = 0
    for n in range(1, 5):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for r in range(len(pairs) + 1):
            for subset in itertools.combinations(pairs, r):
                if count >= limit:
                    return
                g = load(n, list(subset))
                from .oracles import oracle_components
                labels = oracle_components(g)
                if n > 0 and len(set(labels.tolist())) != 1:
                    continue
                yield n, list(subset)
                count += 1
    rng = _rng(seed)
    while count < limit:
        n = int(rng.integers(2, 11))
        extra = int(rng.integers(0, max(1, 15 - n)))
        m = min(14, n - 1 + extra)
        g = gen_connected(n, m, int(rng.integers(2**62)))
        yield n, [g.endpoints(e) for e in range(g.m)]
        count += 1
