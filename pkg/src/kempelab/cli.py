"""Command-line front door: instance generation, verification, searches,
bound scans and Monte Carlo runs, emitting JSON/DOT/CSV artifacts.

Determinism contract: identical flags and inputs give byte-identical primary
outputs; all randomness enters through --seed/--seed-base.  Exit codes:
0 success, 2 usage or malformed input, 3 refuted check, 4 no quadruple
found (a property of the instance, not a failure), 5 resource guard
(budget or cap exhausted).
"""

from __future__ import annotations

import json
from pathlib import Path

import click
from click.core import ParameterSource

from kempelab import io as kio
from kempelab.bounds import (
    combined_minor_bound,
    double_minor_bound,
    simple_minor_bound,
)
from kempelab.construction import (
    alternative_colouring,
    canonical_bags,
    canonical_colouring,
    find_quadruple,
    generate,
)
from kempelab.errors import BudgetExceededError, CapExceededError
from kempelab.graph import BagFamily, partition_of, is_proper
from kempelab.kempe import DEFAULT_CAP, frozen_class_check, is_frozen, kempe_classes
from kempelab.minors import (
    DEFAULT_MINOR_BUDGET,
    DEFAULT_SEARCH_BUDGET,
    find_double_minor,
    find_triple_minor,
    has_kt_minor_exact,
    max_clique,
    triple_minor_cap,
    verify_minor_model,
    verify_quasi_minor,
)
from kempelab.montecarlo import MIN_TRIALS_FOR_INTERVAL, mc_estimate

EXIT_REFUTED = 3
EXIT_NO_QUADRUPLE = 4
EXIT_RESOURCE = 5


def _merge_config(ctx: click.Context, params: dict) -> dict:
    """Overlay values from --config (JSON, keys mirror the long flags);
    explicit command-line flags win on conflict."""
    path = params.get("config")
    if not path:
        return params
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    for key, value in cfg.items():
        pyname = key.replace("-", "_").lstrip("_")
        if pyname == "config":
            continue
        if pyname not in params:
            raise click.UsageError(f"unknown config key {key!r}")
        if ctx.get_parameter_source(pyname) != ParameterSource.COMMANDLINE:
            params[pyname] = value
    return params


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _load_instance(path: str):
    payload = kio.load_payload(path)
    return kio.instance_from_json(payload)


def _load_graph_any(path: str):
    """Graph from either wire format; returns (graph, instance-or-None)."""
    payload = kio.load_payload(path)
    fmt = payload.get("format")
    if fmt == "lvm-graph/1":
        inst = kio.instance_from_json(payload)
        return inst.graph, inst
    if fmt == "graph/1":
        return kio.graph_from_json(payload), None
    raise ValueError(f"unsupported input format {fmt!r}")


@click.group()
def cli() -> None:
    """Kempe-change and clique-minor laboratory for random paired graphs."""


@cli.command()
@click.option("--n", type=int, default=None, help="number of vertex groups")
@click.option("--seed", type=int, default=None, help="64-bit instance seed")
@click.option("--out", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json")
@click.option("--config", type=click.Path(exists=True), default=None)
@click.pass_context
def generate_cmd(ctx: click.Context, **params) -> None:
    """Generate an instance and write it as lvm-graph/1 JSON or DOT."""
    p = _merge_config(ctx, params)
    if p["n"] is None or p["seed"] is None:
        raise click.UsageError("--n and --seed are required")
    try:
        inst = generate(p["n"], p["seed"])
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if p["fmt"] == "dot":
        _emit(kio.instance_to_dot(inst), p["out"])
    else:
        _emit(kio.canonical_dumps(kio.instance_to_json(inst)), p["out"])


@cli.command()
@click.option("--n", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--in", "infile", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.option("--config", type=click.Path(exists=True), default=None)
@click.pass_context
def witness(ctx: click.Context, **params) -> None:
    """Non-equivalence witness pipeline: frozen canonical colouring, quadruple
    search, rotated recolouring, partition comparison."""
    p = _merge_config(ctx, params)
    try:
        if p["infile"]:
            inst = _load_instance(p["infile"])
        elif p["n"] is not None and p["seed"] is not None:
            inst = generate(p["n"], p["seed"])
        else:
            raise ValueError("need --in or both --n and --seed")
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        raise click.UsageError(str(exc))

    base = canonical_colouring(inst)
    frozen = is_frozen(inst.graph, base) and frozen_class_check(inst.graph, base)
    quadruple = find_quadruple(inst)
    alternative_proper = None
    partitions_differ = None
    if quadruple is not None:
        alt = alternative_colouring(inst, quadruple)
        alternative_proper = is_proper(inst.graph, alt)
        partitions_differ = partition_of(alt) != partition_of(base)
    report = {
        "format": "witness-report/1",
        "version": kio.__version__,
        "n": inst.n,
        "seed": inst.seed,
        "frozen": frozen,
        "quadruple": list(quadruple) if quadruple is not None else None,
        "alternativeProper": alternative_proper,
        "partitionsDiffer": partitions_differ,
    }
    _emit(kio.canonical_dumps(report), p["out"])
    if quadruple is None:
        ctx.exit(EXIT_NO_QUADRUPLE)
    if not (frozen and alternative_proper and partitions_differ):
        ctx.exit(EXIT_REFUTED)


@cli.command()
@click.option("--in", "infile", type=click.Path(exists=True), required=True)
@click.option(
    "--what",
    type=click.Choice(["frozen", "quasi-minor", "minor-model"]),
    multiple=True,
    required=True,
)
@click.option("--bags", "bags_file", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def check(ctx: click.Context, infile, what, bags_file, out) -> None:
    """Run verifiers against an instance (canonical colouring/bags) or a
    generic graph with an explicit --bags file."""
    try:
        graph, inst = _load_graph_any(infile)
        bags = None
        if bags_file:
            payload = kio.load_payload(bags_file)
            raw = payload["bags"] if isinstance(payload, dict) else payload
            bags = BagFamily(tuple(frozenset(b) for b in raw))
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        raise click.UsageError(str(exc))

    checks = {}
    for sel in what:
        if sel == "frozen":
            if inst is None:
                raise click.UsageError("frozen check needs an instance file")
            checks[sel] = is_frozen(graph, canonical_colouring(inst))
            continue
        family = bags if bags is not None else (canonical_bags(inst) if inst else None)
        if family is None:
            raise click.UsageError(f"{sel} check on a generic graph needs --bags")
        try:
            if sel == "quasi-minor":
                checks[sel] = verify_quasi_minor(graph, family)
            else:
                checks[sel] = verify_minor_model(graph, family)
        except ValueError as exc:
            raise click.UsageError(str(exc))
    report = {
        "format": "check-report/1",
        "version": kio.__version__,
        "n": inst.n if inst else graph.order,
        "seed": inst.seed if inst else None,
        "checks": checks,
    }
    _emit(kio.canonical_dumps(report), out)
    if not all(checks.values()):
        ctx.exit(EXIT_REFUTED)


@cli.command()
@click.option("--in", "infile", type=click.Path(exists=True), required=True)
@click.option("--clique", is_flag=True, default=False)
@click.option("--exact-minor", "exact_t", type=int, default=None)
@click.option("--double", "double_k", type=int, default=None)
@click.option("--triple", "triple_k", type=int, default=None)
@click.option("--budget", type=int, default=None)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def minors(ctx: click.Context, infile, clique, exact_t, double_k, triple_k, budget, out) -> None:
    """Clique, double-minor, triple-minor or exact complete-minor search."""
    selected = [clique, exact_t is not None, double_k is not None, triple_k is not None]
    if sum(selected) != 1:
        raise click.UsageError("select exactly one of --clique/--exact-minor/--double/--triple")
    try:
        graph, inst = _load_graph_any(infile)
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        raise click.UsageError(str(exc))

    report = {
        "format": "minor-witness/1",
        "version": kio.__version__,
        "witness": None,
        "clique": None,
        "verified": None,
        "note": None,
    }
    try:
        if clique:
            found = max_clique(graph, budget or 10_000_000)
            report.update(search="clique", parameter=None, outcome="found", clique=sorted(found))
        elif exact_t is not None:
            try:
                ok, wit = has_kt_minor_exact(graph, exact_t, budget or DEFAULT_MINOR_BUDGET)
            except ValueError as exc:
                raise click.UsageError(str(exc))
            report.update(search="exactMinor", parameter=exact_t, outcome="found" if ok else "absent")
            if wit is not None:
                report["witness"] = kio.witness_to_json(wit)
                report["verified"] = True
        elif double_k is not None:
            wit = find_double_minor(graph, double_k, budget=budget or DEFAULT_SEARCH_BUDGET)
            report.update(search="double", parameter=double_k, outcome="found" if wit else "absent")
            if wit is not None:
                report["witness"] = kio.witness_to_json(wit)
                report["verified"] = verify_minor_model(graph, wit.bags)
        else:
            if 3 * triple_k > graph.order:
                note = f"bags of size >= 3 cannot fit {triple_k} times into {graph.order} vertices"
                if inst is not None:
                    note += f"; counting cap is {triple_minor_cap(inst.n)}"
                report.update(search="triple", parameter=triple_k, outcome="impossible", note=note)
            else:
                wit = find_triple_minor(graph, triple_k, budget=budget or DEFAULT_SEARCH_BUDGET)
                report.update(search="triple", parameter=triple_k, outcome="found" if wit else "absent")
                if wit is not None:
                    report["witness"] = kio.witness_to_json(wit)
                    report["verified"] = verify_minor_model(graph, wit.bags)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_RESOURCE)
    _emit(kio.canonical_dumps(report), out)


@cli.command()
@click.option("--formula", type=click.Choice(["simple", "double", "combined"]), required=True)
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--scan", type=str, default=None, help="grid start:stop:step over n")
@click.option("--frac", type=float, default=None, help="scan parameter = ceil(frac*n)")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(), default=None)
def bounds(formula, n, k, m, scan, frac, fmt, out) -> None:
    """Evaluate a bound, or scan it over an n-grid (CSV or JSON)."""
    try:
        if scan is not None:
            if formula == "combined":
                raise ValueError("scans support the simple and double formulas")
            if frac is None:
                raise ValueError("--scan needs --frac")
            parts = scan.split(":")
            if len(parts) != 3:
                raise ValueError("--scan wants start:stop:step")
            start, stop, step = (int(x) for x in parts)
            if step <= 0 or stop < start:
                raise ValueError("bad scan grid")
            grid = range(start, stop + 1, step)
            param = lambda nn: max(1, -(-int(frac * nn * 1_000_000) // 1_000_000))
            if formula == "simple":
                rows = [simple_minor_bound(nn, param(nn)) for nn in grid]
                fid = "simpleMinor"
            else:
                rows = [double_minor_bound(nn, param(nn)) for nn in grid]
                fid = "doubleMinor"
            text = (
                kio.bound_scan_to_csv(rows)
                if fmt == "csv"
                else kio.canonical_dumps(kio.bound_scan_to_json(fid, rows))
            )
            _emit(text, out)
            return
        if n is None:
            raise ValueError("--n is required without --scan")
        if formula == "simple":
            if k is None:
                raise ValueError("simple bound needs --k")
            _emit(kio.canonical_dumps(kio.bound_to_json(simple_minor_bound(n, k))), out)
        elif formula == "double":
            if m is None:
                raise ValueError("double bound needs --m")
            _emit(kio.canonical_dumps(kio.bound_to_json(double_minor_bound(n, m))), out)
        else:
            if k is None or m is None:
                raise ValueError("combined bound needs --k and --m")
            rep = combined_minor_bound(n, k, m)
            _emit(kio.canonical_dumps(kio.combined_bound_to_json(rep)), out)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@cli.command()
@click.option("--event", required=True)
@click.option("--n", type=int, required=True)
@click.option("--trials", type=int, required=True)
@click.option("--seed-base", type=int, required=True)
@click.option("--k", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--jobs", type=int, default=1)
@click.option("--interval", is_flag=True, default=False, help="require a 99% interval")
@click.option("--out", type=click.Path(), default=None)
def mc(event, n, trials, seed_base, k, m, jobs, interval, out) -> None:
    """Seeded Monte Carlo estimate of one event."""
    if interval and trials < MIN_TRIALS_FOR_INTERVAL:
        raise click.UsageError(
            f"interval reporting needs at least {MIN_TRIALS_FOR_INTERVAL} trials"
        )
    try:
        rep = mc_estimate(event, n, trials, seed_base, k=k, m=m, jobs=jobs)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(kio.canonical_dumps(kio.estimate_to_json(rep)), out)


@cli.command()
@click.option("--in", "infile", type=click.Path(exists=True), required=True)
@click.option("--k", type=int, required=True)
@click.option("--cap", type=int, default=DEFAULT_CAP)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def kempe(ctx: click.Context, infile, k, cap, out) -> None:
    """Enumerate Kempe equivalence classes of all proper k-colourings."""
    try:
        graph, _ = _load_graph_any(infile)
        if k < 1:
            raise ValueError("k must be >= 1")
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        raise click.UsageError(str(exc))
    try:
        rep = kempe_classes(graph, k, cap)
    except CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_RESOURCE)
    _emit(kio.canonical_dumps(kio.kempe_report_to_json(graph.order, rep)), out)


cli.add_command(generate_cmd, name="generate")


def main() -> None:
    cli(prog_name="kempelab")


if __name__ == "__main__":
    main()
