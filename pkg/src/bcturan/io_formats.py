"""On-disk formats: the "bcg v1" graph text format, certificate and result
serialization, and the theorem-table CSV schema.

All encoders are deterministic: identical inputs produce byte-identical
output.
"""

from __future__ import annotations

import json

from .certify import BaseCase, Certificate, CertStep, RemoveOne, RemoveTwo
from .errors import MalformedCertificate, ParseError
from .graph_core import BipartiteGraph, VertexRef, from_edges, parse_vertex
from .lemmas import LemmaReport
from .search import TableRow, TuranResult

CSV_HEADER = "a,b,pattern,searched,formula,match"


def write_graph(g: BipartiteGraph, comment: str | None = None) -> str:
    lines = ["bcg 1"]
    if comment:
        lines[0:0] = [f"# {line}" for line in comment.splitlines()]
    lines.append(f"{g.a} {g.b}")
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> BipartiteGraph:
    header_seen = False
    sizes = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != "bcg 1":
                raise ParseError(f"bad header {line!r}", line=lineno)
            header_seen = True
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        x, y = int(fields[0]), int(fields[1])
        if sizes is None:
            if x < 1 or y < 1:
                raise ParseError(f"part sizes must be >= 1, got {line!r}", line=lineno)
            sizes = (x, y)
            continue
        a, b = sizes
        if x >= a or y >= b:
            raise ParseError("index out of range", line=lineno)
        if (x, y) in seen:
            raise ParseError(f"duplicate edge {x} {y}", line=lineno)
        seen.add((x, y))
        edges.append((x, y))
    if not header_seen:
        raise ParseError("missing 'bcg 1' header")
    if sizes is None:
        raise ParseError("missing part-size line")
    return from_edges(sizes[0], sizes[1], edges)


def _graph_dict(g: BipartiteGraph) -> dict:
    return {"a": g.a, "b": g.b, "edges": [[i, j] for i, j in g.edges()]}


def _step_dict(step: CertStep) -> dict:
    if isinstance(step, RemoveOne):
        return {"kind": "remove_one", "victim": str(step.victim),
                "degree": step.degree_at_removal}
    if isinstance(step, RemoveTwo):
        return {"kind": "remove_two",
                "victims": [str(step.victims[0]), str(step.victims[1])],
                "degree_sum": step.degree_sum}
    return {"kind": "base_case", "k": step.k, "edges": step.edges}


def write_certificate(cert: Certificate) -> str:
    doc = {
        "type": "certificate",
        "k": cert.k,
        "a": cert.a,
        "b": cert.b,
        "swapped": cert.swapped,
        "claimed_bound": cert.claimed_bound,
        "steps": [_step_dict(s) for s in cert.steps],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_certificate(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(f"not valid JSON: {exc}") from None
    try:
        if doc["type"] != "certificate":
            raise MalformedCertificate(f"unexpected document type {doc['type']!r}")
        steps: list[CertStep] = []
        for raw in doc["steps"]:
            kind = raw["kind"]
            if kind == "remove_one":
                steps.append(RemoveOne(parse_vertex(raw["victim"]), raw["degree"]))
            elif kind == "remove_two":
                x, y = raw["victims"]
                steps.append(RemoveTwo((parse_vertex(x), parse_vertex(y)),
                                       raw["degree_sum"]))
            elif kind == "base_case":
                steps.append(BaseCase(raw["k"], raw["edges"]))
            else:
                raise MalformedCertificate(f"unknown step kind {kind!r}")
        return Certificate(doc["k"], doc["a"], doc["b"], doc["swapped"],
                           tuple(steps), doc["claimed_bound"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"bad certificate document: {exc}") from None


def _table_rows_doc(rows: list[TableRow]) -> dict:
    return {
        "type": "table",
        "rows": [
            {"a": r.a, "b": r.b, "pattern": r.pattern, "searched": r.searched,
             "formula": r.formula, "match": r.match}
            for r in rows
        ],
    }


def write_result(result) -> str:
    """Serialize a TuranResult, Certificate, LemmaReport or table-row list."""
    if isinstance(result, Certificate):
        return write_certificate(result)
    if isinstance(result, LemmaReport):
        doc = {
            "type": "lemma_report",
            "hypotheses_met": result.hypotheses_met,
            "conclusion_holds": result.conclusion_holds,
            "reason": result.reason,
            "witness": result.witness,
        }
    elif isinstance(result, TuranResult):
        doc = {
            "type": "turan_result",
            "value": result.value,
            "nodes_explored": result.nodes_explored,
            "witnesses": [_graph_dict(w) for w in result.witnesses],
        }
    elif isinstance(result, list) and all(isinstance(r, TableRow) for r in result):
        doc = _table_rows_doc(result)
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return json.dumps(doc, indent=2) + "\n"


def write_table_csv(rows: list[TableRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        searched = "none" if r.searched is None else str(r.searched)
        lines.append(
            f"{r.a},{r.b},{r.pattern},{searched},{r.formula},"
            f"{'true' if r.match else 'false'}"
        )
    return "\n".join(lines) + "\n"
