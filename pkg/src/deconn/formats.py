"""Text formats: edge lists, deletion sequences, and frontend event logs.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` (0-based).
Deletion-sequence format: one edge id per line, or the single token line
``shuffle <seed>`` meaning all edges in a seeded uniform random order.
Event-log format: per update a ``DEL <eid>`` line followed by zero or more
``SPLIT <old> <new> <k> v1 .. vk`` and ``BRIDGE <eid>`` lines.
"""

from __future__ import annotations

import numpy as np

from .graph import DynamicGraph, GraphError, load


def parse_edge_list(text: str) -> DynamicGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return load(n, edges)


def format_edge_list(g: DynamicGraph) -> str:
    out = [f"{g.n} {g.m}"]
    for e in range(g.m):
        out.append(f"{int(g.eu[e])} {int(g.ev[e])}")
    return "\n".join(out) + "\n"


def shuffled_deletion_order(m: int, seed: int) -> list[int]:
    rng = np.random.Generator(np.random.PCG64(seed))
    order = np.arange(m)
    rng.shuffle(order)
    return [int(e) for e in order]


def parse_deletion_sequence(text: str, g: DynamicGraph) -> list[int]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1 and lines[0].startswith("shuffle"):
        parts = lines[0].split()
        if len(parts) != 2:
            raise GraphError(f"bad shuffle line {lines[0]!r}")
        return shuffled_deletion_order(g.m, int(parts[1]))
    seq = []
    for ln in lines:
        e = int(ln)
        if not (0 <= e < g.m):
            raise GraphError(f"deletion sequence names unknown edge {e}")
        seq.append(e)
    return seq


def format_event_log(events) -> str:
    """Serialize frontend events; ``events`` yields already-formed lines."""
    return "\n".join(events) + ("\n" if events else "")


def parse_event_log(text: str) -> list[tuple]:
    """Parse a log into (kind, payload) tuples, kinds DEL/SPLIT/BRIDGE."""
    out: list[tuple] = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        parts = ln.split()
        if parts[0] == "DEL" and len(parts) == 2:
            out.append(("DEL", int(parts[1])))
        elif parts[0] == "BRIDGE" and len(parts) == 2:
            out.append(("BRIDGE", int(parts[1])))
        elif parts[0] == "SPLIT" and len(parts) >= 4:
            old, new, k = int(parts[1]), int(parts[2]), int(parts[3])
            verts = [int(x) for x in parts[4:]]
            if len(verts) != k:
                raise GraphError(f"SPLIT line vertex count mismatch: {ln!r}")
            out.append(("SPLIT", old, new, verts))
        else:
            raise GraphError(f"malformed event log line {ln!r}")
    return out
