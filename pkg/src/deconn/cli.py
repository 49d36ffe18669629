"""Command line interface: run | verify | matching | selftest-stats.

Exit codes: 0 ok, 1 verification mismatch, 2 configuration error.
"""

from __future__ import annotations

import sys

import click

from . import bench, formats, generators
from .engine import CertificateParams
from .graph import GraphError
from .matching import MatchingRetryError, unique_perfect_matching


def _load_graph(graph_file, gen, n, m, seed):
    if (graph_file is None) == (gen is None):
        raise click.UsageError("provide exactly one of --graph and --gen")
    if graph_file is not None:
        try:
            with open(graph_file, "r", encoding="utf-8") as fh:
                return formats.parse_edge_list(fh.read())
        except (OSError, GraphError) as exc:
            raise click.UsageError(f"cannot load graph: {exc}")
    try:
        return generators.from_name(gen, n, m, seed)
    except GraphError as exc:
        raise click.UsageError(str(exc))


def _params(g, c, p, delta, ell, q, gamma, z, delta_variant):
    try:
        return CertificateParams.defaults(
            g.n, c, z=z, p=p, delta=delta, ell=ell, q=q, gamma=gamma,
            delta_variant=delta_variant)
    except ValueError as exc:
        raise click.UsageError(str(exc))


param_options = [
    click.option("--c", type=click.Choice(["1", "2", "3"]), default="1",
                 help="connectivity order"),
    click.option("--seed", type=int, default=0, help="master seed"),
    click.option("--p", type=float, default=None, help="per-level sample fraction"),
    click.option("--delta", type=int, default=None, help="boundary pruning threshold"),
    click.option("--ell", type=int, default=None, help="level count"),
    click.option("--q", type=float, default=None, help="probe sampling probability"),
    click.option("--gamma", type=int, default=2, help="fingerprint words"),
    click.option("--z", type=int, default=4, help="level multiplier when --ell unset"),
    click.option("--delta-variant", type=click.Choice(["32c", "12c"]), default="32c"),
]


def add_options(opts):
    def wrap(fn):
        for opt in reversed(opts):
            fn = opt(fn)
        return fn
    return wrap


@click.group()
def main():
    """Decremental connectivity benchmark and verification harness."""


@main.command()
@click.option("--graph", "graph_file", type=click.Path(), default=None,
              help="edge-list file ('n m' header then 'u v' lines)")
@click.option("--gen", type=click.Choice(sorted(generators.GENERATORS)), default=None)
@click.option("--n", type=int, default=64)
@click.option("--m", type=int, default=256)
@add_options(param_options)
@click.option("--verify", type=click.Choice(["none", "checkpoints", "every-step"]),
              default="none")
@click.option("--seeds", type=int, default=1, help="consecutive seeds to run")
@click.option("--deletions", "deletions_file", type=click.Path(), default=None,
              help="deletion sequence file (edge ids, or 'shuffle <seed>')")
@click.option("--csv", "csv_path", type=click.Path(), default=None)
@click.option("--log", "log_path", type=click.Path(), default=None,
              help="write the event log of the first seed")
@click.option("--timings", is_flag=True, default=False,
              help="append wall-time columns (breaks byte-determinism)")
def run(graph_file, gen, n, m, c, seed, p, delta, ell, q, gamma, z, delta_variant,
        verify, seeds, deletions_file, csv_path, log_path, timings):
    """Full-deletion benchmark; one CSV row per seed."""
    c = int(c)
    if c == 3:
        raise click.UsageError(
            "the query frontend supports c in {1,2}; c=3 is oracle-only")
    cells = []
    for k in range(seeds):
        g = _load_graph(graph_file, gen, n, m, seed + k)
        params = _params(g, c, p, delta, ell, q, gamma, z, delta_variant)
        order = None
        if deletions_file is not None:
            try:
                with open(deletions_file, "r", encoding="utf-8") as fh:
                    order = formats.parse_deletion_sequence(fh.read(), g)
            except (OSError, GraphError) as exc:
                raise click.UsageError(f"bad deletion sequence: {exc}")
        cells.append(bench.BenchConfig(
            generator=gen or "file", graph_file=graph_file, n=g.n, m=g.m, c=c,
            seed=seed + k, verify=verify, params=params, deletion_order=order,
            timings=timings))
    records, code = bench.bench_run(cells, csv_path=None, with_timings=timings,
                                    keep_log=log_path is not None)
    text = bench.render_csv(records, timings)
    if csv_path:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if log_path:
        with open(log_path, "w", encoding="utf-8") as fh:
            fh.write(records[0].log_text)
    for r in records:
        click.echo(
            f"# seed {r.config.seed}: deletions={r.deletions} "
            f"churn={r.boundary_churn} selfcheck={r.selfcheck} "
            f"mismatches={r.mismatches}", err=True)
    sys.exit(code)


@main.command()
@click.option("--graph", "graph_file", type=click.Path(), required=True)
@click.option("--deletions", "deletions_file", type=click.Path(), required=True)
@click.option("--log", "log_path", type=click.Path(), required=True)
@click.option("--c", type=click.Choice(["1", "2"]), default="1")
def verify(graph_file, deletions_file, log_path, c):
    """Replay an event log against the brute-force oracles."""
    g = _load_graph(graph_file, None, 0, 0, 0)
    try:
        with open(deletions_file, "r", encoding="utf-8") as fh:
            order = formats.parse_deletion_sequence(fh.read(), g)
        with open(log_path, "r", encoding="utf-8") as fh:
            log_text = fh.read()
    except (OSError, GraphError) as exc:
        raise click.UsageError(str(exc))
    ok, problems = bench.verify_replay(log_text, g, order, int(c))
    if ok:
        click.echo("replay ok")
        sys.exit(0)
    for pr in problems:
        click.echo(f"mismatch: {pr}")
    sys.exit(1)


@main.command()
@click.option("--graph", "graph_file", type=click.Path(), default=None)
@click.option("--gen", type=click.Choice(sorted(generators.GENERATORS)), default=None)
@click.option("--n", type=int, default=16)
@click.option("--m", type=int, default=24)
@click.option("--seed", type=int, default=0)
@click.option("--retry-cap", type=int, default=8)
def matching(graph_file, gen, n, m, seed, retry_cap):
    """Decide whether the graph has a unique perfect matching."""
    g = _load_graph(graph_file, gen, n, m, seed)
    edges = [g.endpoints(e) for e in range(g.m)]
    try:
        res = unique_perfect_matching(g.n, edges, seed=seed, retry_cap=retry_cap)
    except MatchingRetryError as exc:
        click.echo(f"error: {exc}")
        sys.exit(1)
    click.echo(f"verdict: {res.status} (attempts: {res.attempts})")
    if res.matching is not None:
        click.echo("matching: " + " ".join(str(e) for e in res.matching))
    sys.exit(0)


@main.command("selftest-stats")
@click.option("--gen", type=click.Choice(sorted(generators.GENERATORS)), default="gnm")
@click.option("--n", type=int, default=128)
@click.option("--m", type=int, default=1024)
@add_options(param_options)
@click.option("--seeds", type=int, default=20)
@click.option("--csv", "csv_path", type=click.Path(), default=None)
@click.option("--no-fallback", is_flag=True, default=False,
              help="disable the completion fallback (pure Monte-Carlo mode)")
def selftest_stats(gen, n, m, c, seed, p, delta, ell, q, gamma, z, delta_variant,
                   seeds, csv_path, no_fallback):
    """Self-check pass rate over consecutive seeds."""
    from .frontend import DecrementalConnectivity

    c = int(c)
    if c == 3:
        raise click.UsageError("self-check stats run on the c in {1,2} frontend")
    passed = 0
    rows = []
    for k in range(seeds):
        g = _load_graph(None, gen, n, m, seed + k)
        params = _params(g, c, p, delta, ell, q, gamma, z, delta_variant)
        d = DecrementalConnectivity(g, c, params=params, seed=seed + k,
                                    auto_fallback=not no_fallback)
        for e in formats.shuffled_deletion_order(g.m, seed + k):
            d.delete(e)
        ok = d.finalize().passed
        passed += ok
        rows.append((seed + k, "pass" if ok else "fail"))
    click.echo(f"pass rate: {passed}/{seeds}")
    if csv_path:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write("seed,selfcheck\n")
            for s, verdict in rows:
                fh.write(f"{s},{verdict}\n")
    sys.exit(0)


if __name__ == "__main__":
    main()
