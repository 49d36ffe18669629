"""Benchmark and verification harness with CSV output.

One run: build a structure over a generated or loaded graph, delete every
edge in a seeded order, optionally verify the public answers against the
brute-force oracles at every step or at checkpoints, and emit one CSV row
of exact instrumentation counters.  A verified run whose self-check passes
must never disagree with an oracle; such a disagreement is the one
condition that makes the harness exit nonzero.

Timing columns are off by default so that fixed (seed, config) pairs
reproduce byte-identical CSV.
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass, field

import numpy as np

from . import formats, generators
from .engine import CertificateParams
from .frontend import DecrementalConnectivity
from .graph import DynamicGraph, GraphError
from .oracles import (
    canonical_labels,
    oracle_2ec_partition,
    oracle_bridges,
    oracle_components,
)

CSV_SCHEMA = 1

CSV_COLUMNS = [
    "schema", "generator", "n", "m", "c", "p", "delta", "ell", "q", "gamma",
    "seed", "deletions", "boundary_churn", "fallback_insertions",
    "cert_insertions", "cert_size_initial", "cert_size_max", "cert_trace",
    "split_mass", "verify", "mismatches", "selfcheck",
]

TIMING_COLUMNS = ["t_init_s", "t_updates_s", "t_verify_s"]


@dataclass
class BenchConfig:
    generator: str = "gnm"
    graph_file: str | None = None
    n: int = 64
    m: int = 256
    c: int = 1
    seed: int = 0
    verify: str = "none"             # none | checkpoints | every-step
    params: CertificateParams | None = None
    deletion_order: list[int] | None = None
    timings: bool = False
    trace_points: int = 8


@dataclass
class BenchRecord:
    config: BenchConfig
    deletions: int = 0
    boundary_churn: int = 0
    fallback_insertions: int = 0
    cert_insertions: int = 0
    cert_size_initial: int = 0
    cert_size_max: int = 0
    cert_trace: list = field(default_factory=list)
    split_mass: int = 0
    mismatches: int = 0
    selfcheck: str = "pass"
    timings: dict = field(default_factory=dict)
    log_text: str = ""

    def csv_row(self, with_timings: bool) -> list[str]:
        cfg = self.config
        pr = cfg.params
        row = [
            str(CSV_SCHEMA), cfg.generator, str(cfg.n), str(cfg.m), str(cfg.c),
            f"{pr.p:.8g}", str(pr.delta), str(pr.ell), f"{pr.q:.8g}",
            str(pr.gamma), str(cfg.seed), str(self.deletions),
            str(self.boundary_churn), str(self.fallback_insertions),
            str(self.cert_insertions), str(self.cert_size_initial),
            str(self.cert_size_max),
            ";".join(str(x) for x in self.cert_trace),
            str(self.split_mass), cfg.verify, str(self.mismatches),
            self.selfcheck,
        ]
        if with_timings:
            row += [f"{self.timings.get(k, 0.0):.6f}" for k in
                    ("init", "updates", "verify")]
        return row


def _build_graph(cfg: BenchConfig) -> DynamicGraph:
    if cfg.graph_file is not None:
        with open(cfg.graph_file, "r", encoding="utf-8") as fh:
            return formats.parse_edge_list(fh.read())
    return generators.from_name(cfg.generator, cfg.n, cfg.m, cfg.seed)


def _oracle_labels(g: DynamicGraph, c: int) -> np.ndarray:
    return oracle_components(g) if c == 1 else oracle_2ec_partition(g)


def run_cell(cfg: BenchConfig, keep_log: bool = False) -> BenchRecord:
    """Run one (config, seed) cell: full deletion with optional verification."""
    g = _build_graph(cfg)
    params = cfg.params or CertificateParams.defaults(g.n, cfg.c)
    rec = BenchRecord(config=BenchConfig(**{**cfg.__dict__, "params": params,
                                            "n": g.n, "m": g.m}))
    t0 = time.perf_counter()
    d = DecrementalConnectivity(g, cfg.c, params=params, seed=cfg.seed,
                                keep_log=keep_log)
    t1 = time.perf_counter()

    order = cfg.deletion_order
    if order is None:
        order = formats.shuffled_deletion_order(g.m, cfg.seed)
    steps = len(order)
    checkpoints: set[int] = set()
    if cfg.verify == "every-step":
        checkpoints = set(range(steps + 1))
    elif cfg.verify == "checkpoints":
        k = max(1, steps // cfg.trace_points)
        checkpoints = set(range(0, steps + 1, k)) | {steps}

    mismatches = 0
    if 0 in checkpoints:
        if not np.array_equal(canonical_labels(d.component_labels()),
                              _oracle_labels(g, cfg.c)):
            mismatches += 1
        if cfg.c == 2 and set(d.current_bridges()) != oracle_bridges(g):
            mismatches += 1
    trace_every = max(1, steps // max(1, cfg.trace_points))
    for idx, e in enumerate(order, start=1):
        d.delete(e)
        if idx in checkpoints:
            if not np.array_equal(canonical_labels(d.component_labels()),
                                  _oracle_labels(g, cfg.c)):
                mismatches += 1
            if cfg.c == 2 and set(d.current_bridges()) != oracle_bridges(g):
                mismatches += 1
    t2 = time.perf_counter()

    report = d.finalize()
    eng = d.engine
    rec.deletions = steps
    rec.boundary_churn = sum(eng.counters.boundary_prune_edges)
    rec.fallback_insertions = eng.counters.fallback_insertions
    rec.cert_insertions = eng.counters.cert_insertions
    trace = eng.counters.cert_size_trace
    rec.cert_size_initial = trace[0] if trace else 0
    rec.cert_size_max = max(trace) if trace else 0
    rec.cert_trace = trace[::trace_every]
    rec.split_mass = d._notion().split_mass
    rec.mismatches = mismatches
    rec.selfcheck = "pass" if report.passed else "fail"
    rec.timings = {"init": t1 - t0, "updates": t2 - t1,
                   "verify": time.perf_counter() - t2}
    if keep_log:
        rec.log_text = d.event_log_text()

    # hard structural bounds asserted on every run
    n = g.n
    for lvl, churn in enumerate(eng.counters.boundary_prune_edges):
        if churn > max(0, (2 * n - 1)) * params.delta:
            raise AssertionError(
                f"level {lvl} boundary churn {churn} exceeds (2n-1)*delta")
    bound = n * (1 + int(np.ceil(np.log2(max(n, 2)))))
    for tr in [*eng.tr, d.conn] + ([d.twoec] if d.twoec is not None else []):
        if tr.split_mass > bound:
            raise AssertionError("split mass exceeded n(1+ceil(log2 n))")
    return rec


def bench_run(cells: list[BenchConfig], csv_path: str | None = None,
              with_timings: bool = False, keep_log: bool = False):
    """Run all cells; returns (records, exit_code)."""
    records = [run_cell(cfg, keep_log=keep_log) for cfg in cells]
    bad = any(r.mismatches > 0 and r.selfcheck == "pass" for r in records)
    if csv_path is not None:
        text = render_csv(records, with_timings)
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return records, (1 if bad else 0)


def render_csv(records, with_timings: bool = False) -> str:
    cols = CSV_COLUMNS + (TIMING_COLUMNS if with_timings else [])
    out = io.StringIO()
    out.write(",".join(cols) + "\n")
    for r in records:
        out.write(",".join(r.csv_row(with_timings)) + "\n")
    return out.getvalue()


def verify_replay(log_text: str, g: DynamicGraph, deletions: list[int], c: int):
    """Replay a frontend event log against the oracles.

    Checks that DEL lines follow the given deletion sequence, that the
    partition implied by SPLIT lines matches the oracle partition after
    every update, and that BRIDGE lines appear exactly when the oracle says
    a new bridge appeared (c=2).  Returns (ok, diagnostics).
    """
    events = formats.parse_event_log(log_text)
    # component ids start as the connected components of the input in
    # first-occurrence order; every later id is created by a SPLIT line
    labels = oracle_components(g)
    comp_sets: dict[int, set[int]] = {}
    for v in range(g.n):
        comp_sets.setdefault(int(labels[v]), set()).add(v)
    next_id = len(comp_sets)
    known_bridges = oracle_bridges(g) if c == 2 else set()
    reported: set[int] = set()

    idx = 0
    del_pos = 0
    problems: list[str] = []

    def check_partition(where: str) -> None:
        want = _oracle_labels(g, c)
        have = np.full(g.n, -1, dtype=np.int64)
        for cid, members in comp_sets.items():
            for v in members:
                have[v] = cid
        if not np.array_equal(canonical_labels(have), canonical_labels(want)):
            problems.append(f"partition mismatch after {where}")

    def apply_split(ev) -> bool:
        nonlocal next_id
        _, old, new, verts = ev
        if old not in comp_sets or not set(verts) <= comp_sets[old]:
            problems.append(f"SPLIT {old}->{new} names foreign vertices")
            return False
        if new != next_id:
            problems.append(f"SPLIT new id {new}, expected {next_id}")
            return False
        next_id += 1
        comp_sets[old] -= set(verts)
        comp_sets[new] = set(verts)
        return True

    # prologue before the first DEL: the initial bridge pruning (c=2)
    while idx < len(events) and events[idx][0] in ("SPLIT", "BRIDGE"):
        ev = events[idx]
        idx += 1
        if ev[0] == "SPLIT":
            if not apply_split(ev):
                return False, problems
        else:
            reported.add(ev[1])
    check_partition("initial pruning")
    if c == 2 and reported != known_bridges:
        problems.append(
            f"initial bridges {sorted(reported)} != oracle {sorted(known_bridges)}")

    while idx < len(events):
        kind = events[idx][0]
        if kind != "DEL":
            problems.append(f"expected DEL at event {idx}")
            break
        e = events[idx][1]
        if del_pos >= len(deletions) or deletions[del_pos] != e:
            problems.append(f"DEL {e} does not match deletion sequence at {del_pos}")
            break
        del_pos += 1
        idx += 1
        g.delete(e)
        step_bridges: set[int] = set()
        bad = False
        while idx < len(events) and events[idx][0] in ("SPLIT", "BRIDGE"):
            ev = events[idx]
            idx += 1
            if ev[0] == "SPLIT":
                if not apply_split(ev):
                    bad = True
                    break
            else:
                step_bridges.add(ev[1])
        if bad:
            break
        check_partition(f"DEL {e}")
        if c == 2:
            now = oracle_bridges(g)
            fresh = now - known_bridges
            if step_bridges != fresh:
                problems.append(
                    f"bridges after DEL {e}: logged {sorted(step_bridges)},"
                    f" oracle new {sorted(fresh)}")
            known_bridges = now
            reported |= step_bridges

    if not problems and del_pos != len(deletions):
        problems.append(
            f"log covers {del_pos} of {len(deletions)} deletions")
    ok = not problems
    return ok, problems
