"""Canonical JSON forms for colored graphs and certificates.

The colored-graph document is ``{"n": int, "edges": [[u, v, c], ...]}`` with
0-indexed u < v, colors in {1, 2}, and edges sorted lexicographically, so two
equal values serialize to identical bytes and certificates can be diffed.
Exact rationals are rendered as fraction strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certify import Certificate, CheckRow
from .graphs import ColoredGraph, VertexPartition


def colored_graph_to_dict(cg: ColoredGraph, parts: VertexPartition | None = None) -> dict:
    edges = sorted(
        [u, v, c] for (u, v), c in cg.coloring.colors.items()
    )
    doc = {"n": cg.n, "edges": edges}
    if parts is not None:
        doc["parts"] = [list(p) for p in parts.parts]
    return doc


def colored_graph_from_dict(doc: dict) -> ColoredGraph:
    try:
        n = doc["n"]
        edges = doc["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"colored-graph document missing field: {exc}") from exc
    return ColoredGraph.from_colored_edges(n, [tuple(e) for e in edges])


def partition_from_dict(doc: dict) -> VertexPartition:
    if "parts" not in doc:
        raise ValueError("document carries no 'parts' field")
    return VertexPartition(doc["n"], [tuple(p) for p in doc["parts"]])


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return repr(value)


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "status": cert.status,
        "checks": [
            {
                "name": row.name,
                "measured": _jsonable(row.measured),
                "bound": _jsonable(row.bound),
                "verdict": row.verdict,
            }
            for row in cert.checks
        ],
        "witness": list(cert.witness) if cert.witness is not None else None,
        "params": _jsonable(cert.params),
    }


def certificate_from_dict(doc: dict) -> Certificate:
    checks = [
        CheckRow(c["name"], c["measured"], c["bound"], c["verdict"])
        for c in doc["checks"]
    ]
    witness = tuple(doc["witness"]) if doc.get("witness") is not None else None
    return Certificate(doc["status"], checks, witness, doc.get("params", {}))


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
