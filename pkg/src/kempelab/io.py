"""Wire formats: canonical JSON, DOT and CSV emitters, and schema lookup.

Primary artifacts are byte-identical across reruns: canonical JSON uses
sorted keys, fixed separators and a trailing newline, and nothing here
writes timestamps or environment-dependent values.
"""

from __future__ import annotations

import json
from dataclasses import replace
from importlib import resources

from kempelab._version import __version__
from kempelab.bounds import BoundReport, CombinedBound
from kempelab.construction import (
    ExclusionChoice,
    LvmInstance,
    from_exclusions,
    index_pairs,
)
from kempelab.graph import Graph, make_graph
from kempelab.kempe import KempeClassReport
from kempelab.minors import MinorWitness
from kempelab.montecarlo import EstimateReport

FORMAT_SCHEMAS = {
    "graph/1": "graph.v1.schema.json",
    "lvm-graph/1": "lvm-graph.v1.schema.json",
    "witness-report/1": "witness-report.v1.schema.json",
    "check-report/1": "check-report.v1.schema.json",
    "minor-witness/1": "minor-witness.v1.schema.json",
    "kempe-report/1": "kempe-report.v1.schema.json",
    "estimate/1": "estimate.v1.schema.json",
    "bound/1": "bound.v1.schema.json",
    "combined-bound/1": "combined-bound.v1.schema.json",
    "bound-scan/1": "bound-scan.v1.schema.json",
}


def canonical_dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def schema_for(format_id: str) -> dict:
    """The published JSON schema shipped for a format id."""
    name = FORMAT_SCHEMAS[format_id]
    text = resources.files("kempelab").joinpath("schemas").joinpath(name).read_text()
    return json.loads(text)


def graph_to_json(g: Graph) -> dict:
    return {"format": "graph/1", "order": g.order, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(payload: dict) -> Graph:
    if payload.get("format") != "graph/1":
        raise ValueError("not a graph/1 payload")
    return make_graph(payload["order"], [tuple(e) for e in payload["edges"]])


def instance_to_json(inst: LvmInstance) -> dict:
    return {
        "format": "lvm-graph/1",
        "n": inst.n,
        "seed": inst.seed,
        "exclusions": [
            {"i": i, "j": j, "choice": choice.value}
            for (i, j), choice in zip(index_pairs(inst.n), inst.exclusions)
        ],
    }


def instance_from_json(payload: dict) -> LvmInstance:
    if payload.get("format") != "lvm-graph/1":
        raise ValueError("not an lvm-graph/1 payload")
    table = {
        (e["i"], e["j"]): ExclusionChoice(e["choice"]) for e in payload["exclusions"]
    }
    if len(table) != len(payload["exclusions"]):
        raise ValueError("duplicate pair in exclusion table")
    inst = from_exclusions(payload["n"], table)
    seed = payload.get("seed")
    return replace(inst, seed=seed) if seed is not None else inst


def load_payload(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def estimate_to_json(rep: EstimateReport) -> dict:
    return {
        "format": "estimate/1",
        "version": __version__,
        "eventId": rep.event_id,
        "n": rep.n,
        "k": rep.k,
        "m": rep.m,
        "trials": rep.trials,
        "seedBase": rep.seed_base,
        "kind": rep.kind,
        "successes": rep.successes,
        "sumValues": rep.sum_values,
        "sumSquares": rep.sum_squares,
        "mean": rep.mean,
        "standardError": rep.standard_error,
        "ci99": list(rep.ci99) if rep.ci99 is not None else None,
    }


def bound_to_json(rep: BoundReport) -> dict:
    return {
        "format": "bound/1",
        "version": __version__,
        "formulaId": rep.formula_id,
        "n": rep.n,
        "parameter": rep.parameter,
        "logValue": rep.log_value,
        "value": rep.value if rep.value != float("inf") else None,
        "flag": rep.flag,
    }


def combined_bound_to_json(rep: CombinedBound) -> dict:
    return {
        "format": "combined-bound/1",
        "version": __version__,
        "n": rep.n,
        "kSimple": rep.k_simple,
        "kDouble": rep.k_double,
        "simpleLogValue": rep.simple.log_value,
        "doubleLogValue": rep.double.log_value,
        "logFailureBound": rep.log_failure_bound,
        "failureProbBound": rep.failure_prob_bound
        if rep.failure_prob_bound != float("inf")
        else None,
        "tripleCap": rep.triple_cap,
        "minorSizeBound": rep.minor_size_bound,
    }


def bound_scan_to_json(formula_id: str, rows: list[BoundReport]) -> dict:
    return {
        "format": "bound-scan/1",
        "version": __version__,
        "formulaId": formula_id,
        "rows": [
            {
                "n": r.n,
                "parameter": r.parameter,
                "logValue": r.log_value,
                "value": r.value if r.value != float("inf") else None,
            }
            for r in rows
        ],
    }


def bound_scan_to_csv(rows: list[BoundReport]) -> str:
    lines = ["n,parameter,logValue,value"]
    for r in rows:
        value = "" if r.value == float("inf") else repr(r.value)
        lines.append(f"{r.n},{r.parameter},{r.log_value!r},{value}")
    return "\n".join(lines) + "\n"


def kempe_report_to_json(order: int, rep: KempeClassReport) -> dict:
    return {
        "format": "kempe-report/1",
        "version": __version__,
        "order": order,
        "paletteSize": rep.palette_size,
        "colouringCount": rep.colouring_count,
        "classCount": rep.class_count,
        "classSizes": rep.class_sizes(),
        "representatives": [list(r) for r in rep.representatives()],
        "partitionClassCount": rep.partition_class_count,
    }


def witness_to_json(w: MinorWitness) -> dict:
    return {"kind": w.kind, "bags": [sorted(b) for b in w.bags.bags]}


def instance_to_dot(inst: LvmInstance) -> str:
    """DOT export with side labels: a-side vertices one colour, b-side the other."""
    names = {}
    lines = ["graph pairing {", "  node [style=filled];"]
    for i in range(1, inst.n + 1):
        names[2 * (i - 1)] = f"a{i}"
        names[2 * (i - 1) + 1] = f"b{i}"
    for v in range(2 * inst.n):
        fill = "lightblue" if v % 2 == 0 else "lightsalmon"
        lines.append(f'  {names[v]} [fillcolor={fill}];')
    for u, v in inst.graph.edges():
        lines.append(f"  {names[u]} -- {names[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
