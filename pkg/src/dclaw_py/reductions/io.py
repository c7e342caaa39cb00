"""
dclaw_py.reductions.io
======================
Text formats for source instances and on-disk reduction artifacts.

NAE formula format
------------------
    n m
    a b c      (m lines, three distinct 1-based variables)

Hypergraph format
-----------------
    n m r
    v1 .. vr   (m lines, r distinct 0-based vertex ids)

Artifacts
---------
`save_artifact(artifact, prefix)` writes `<prefix>.edges` (edge-list
format) and `<prefix>.json` (kind, d, budget_k, labels, source_map,
metadata, fingerprint and the sha256 of the edge file).
`load_artifact(prefix)` reads both back and rejects a sidecar whose
checksum no longer matches the edge file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..common.errors import GraphInputError, ParseError, PreconditionError
from ..common.hashing import graph_fingerprint, sha256_file
from ..common.logging import get_logger
from ..graph.io import iter_records, parse_ints, read_edge_list, write_edge_list
from .base import Hypergraph, NaeFormula, ReductionArtifact

log = get_logger(__name__)

SIDECAR_VERSION = 1


def _read_text(path: str | Path) -> tuple[str, str]:
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8"), str(p)
    except OSError as exc:
        log.error("[dclaw_py.reductions.io] cannot read %s: %s", p, exc)
        raise ParseError(f"cannot read file: {exc}", path=str(p)) from exc


def _rows(text: str, path: str | None, header_len: int, what: str) -> tuple[list[int], list[list[int]]]:
    records = iter_records(text)
    try:
        line, tokens = next(records)
    except StopIteration:
        raise ParseError(f"missing {what} header", path=path) from None
    head = parse_ints(tokens, path=path, line=line)
    if len(head) != header_len or any(x < 0 for x in head):
        raise ParseError(f"header must be {what} with nonnegative integers", path=path, line=line)
    rows = [parse_ints(tokens, path=path, line=line) for line, tokens in records]
    if len(rows) != head[1]:
        raise ParseError(f"header announces {head[1]} records, found {len(rows)}", path=path)
    return head, rows


# ----------------------------------------------------------------------
# NAE formulas
# ----------------------------------------------------------------------
def parse_nae_formula(text: str, *, path: str | None = None) -> NaeFormula:
    head, rows = _rows(text, path, 2, "'n m'")
    try:
        return NaeFormula.of(head[0], rows)
    except GraphInputError as exc:
        raise ParseError(str(exc), path=path) from exc


def read_nae_formula(path: str | Path) -> NaeFormula:
    text, p = _read_text(path)
    return parse_nae_formula(text, path=p)


def format_nae_formula(f: NaeFormula) -> str:
    lines = [f"{f.n} {f.m}"] + [" ".join(str(x) for x in c) for c in f.clauses]
    return "\n".join(lines) + "\n"


def write_nae_formula(f: NaeFormula, path: str | Path) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(format_nae_formula(f), encoding="utf-8")
    return p


# ----------------------------------------------------------------------
# Hypergraphs
# ----------------------------------------------------------------------
def parse_hypergraph(text: str, *, path: str | None = None) -> Hypergraph:
    head, rows = _rows(text, path, 3, "'n m r'")
    n, _, r = head
    try:
        return Hypergraph.of(n, r, rows)
    except (GraphInputError, PreconditionError) as exc:
        raise ParseError(str(exc), path=path) from exc


def read_hypergraph(path: str | Path) -> Hypergraph:
    text, p = _read_text(path)
    return parse_hypergraph(text, path=p)


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m} {h.r}"] + [" ".join(str(v) for v in e) for e in h.edges]
    return "\n".join(lines) + "\n"


def write_hypergraph(h: Hypergraph, path: str | Path) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(format_hypergraph(h), encoding="utf-8")
    return p


# ----------------------------------------------------------------------
# Artifacts
# ----------------------------------------------------------------------
def artifact_paths(prefix: str | Path) -> tuple[Path, Path]:
    p = Path(prefix)
    return p.with_name(p.name + ".edges"), p.with_name(p.name + ".json")


def sidecar_record(artifact: ReductionArtifact) -> dict[str, Any]:
    g = artifact.graph
    return {
        "version": SIDECAR_VERSION,
        "kind": artifact.kind,
        "d": artifact.d,
        "budget_k": artifact.budget_k,
        "n": g.n,
        "m": g.edge_count,
        "fingerprint": graph_fingerprint(g.n, g.edges()),
        "vertex_labels": list(artifact.vertex_labels),
        "source_map": artifact.source_map,
        "metadata": artifact.metadata,
    }


def save_artifact(artifact: ReductionArtifact, prefix: str | Path) -> tuple[Path, Path]:
    """
    Write `<prefix>.edges` and `<prefix>.json`.

    Returns
    -------
    tuple[Path, Path]
        Edge-list path and sidecar path.
    """
    edges_path, json_path = artifact_paths(prefix)
    write_edge_list(
        artifact.graph,
        edges_path,
        comments=[f"kind={artifact.kind} d={artifact.d} budget_k={artifact.budget_k}"],
    )
    record = sidecar_record(artifact)
    record["edges_sha256"] = sha256_file(edges_path)
    json_path.write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")
    log.info("[dclaw_py.reductions.io] saved %s artifact to %s (+ .json)", artifact.kind, edges_path)
    return edges_path, json_path


def load_artifact(prefix: str | Path) -> ReductionArtifact:
    """
    Re-load an artifact written by `save_artifact`.

    Raises
    ------
    ParseError
        If either file is missing or malformed, or the edge file changed
        after the sidecar was written.
    """
    edges_path, json_path = artifact_paths(prefix)
    g = read_edge_list(edges_path)
    text, p = _read_text(json_path)
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid sidecar JSON: {exc.msg}", path=p, line=exc.lineno) from exc

    expected = record.get("edges_sha256")
    if expected is not None and expected != sha256_file(edges_path):
        log.error("[dclaw_py.reductions.io] %s does not match its sidecar checksum", edges_path)
        raise ParseError("edge file does not match sidecar checksum", path=str(edges_path))

    try:
        return ReductionArtifact(
            kind=record["kind"],
            graph=g,
            d=int(record["d"]),
            budget_k=record["budget_k"],
            vertex_labels=tuple(record["vertex_labels"]),
            source_map=record.get("source_map", {}),
            metadata=record.get("metadata", {}),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"incomplete sidecar record: {exc}", path=p) from exc
