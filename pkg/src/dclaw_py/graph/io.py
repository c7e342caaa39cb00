"""
dclaw_py.graph.io
=================
Edge-list and vertex-set text formats.

Edge-list format
----------------
    # optional comment lines
    n m
    u v        (exactly m lines, 0-based ids, u != v)

Writers emit edges with u < v, sorted lexicographically, so a graph written
and parsed back has an identical adjacency structure.

Vertex-set format
-----------------
Whitespace-separated vertex ids over any number of lines, `#` comments
allowed. An empty file is the empty set.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from ..common.errors import GraphInputError, ParseError
from ..common.hashing import canonical_edge_text
from ..common.logging import get_logger
from .core import Graph, from_edge_list

log = get_logger(__name__)


def iter_records(text: str) -> Iterator[tuple[int, list[str]]]:
    """Yield (1-based line number, tokens) for every non-blank, non-comment line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def parse_ints(tokens: list[str], *, path: str | None, line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", path=path, line=line) from None


def parse_edge_list(text: str, *, path: str | None = None) -> Graph:
    """
    Parse the edge-list format.

    Raises
    ------
    ParseError
        On a malformed header, wrong edge count, non-integer tokens, or an
        invalid edge (out of range, loop, duplicate).
    """
    records = iter_records(text)
    try:
        line, header = next(records)
    except StopIteration:
        raise ParseError("missing 'n m' header", path=path) from None

    head = parse_ints(header, path=path, line=line)
    if len(head) != 2 or head[0] < 0 or head[1] < 0:
        raise ParseError("header must be 'n m' with nonnegative integers", path=path, line=line)
    n, m = head

    edges: list[tuple[int, int]] = []
    for line, tokens in records:
        pair = parse_ints(tokens, path=path, line=line)
        if len(pair) != 2:
            raise ParseError("edge line must hold exactly two ids", path=path, line=line)
        edges.append((pair[0], pair[1]))

    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", path=path)

    try:
        return from_edge_list(n, edges)
    except GraphInputError as exc:
        raise ParseError(str(exc), path=path) from exc


def format_edge_list(g: Graph, *, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    return "\n".join(lines) + ("\n" if lines else "") + canonical_edge_text(g.n, g.edges())


def read_edge_list(path: str | Path) -> Graph:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        log.error("[dclaw_py.graph.io] cannot read %s: %s", p, exc)
        raise ParseError(f"cannot read file: {exc}", path=str(p)) from exc
    return parse_edge_list(text, path=str(p))


def write_edge_list(g: Graph, path: str | Path, *, comments: list[str] | None = None) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(format_edge_list(g, comments=comments), encoding="utf-8")
    log.debug("[dclaw_py.graph.io] wrote %d vertices / %d edges to %s", g.n, g.edge_count, p)
    return p


def parse_vertex_set(text: str, n: int, *, path: str | None = None) -> frozenset[int]:
    """
    Parse a vertex-set file against a graph on n vertices.

    Raises
    ------
    ParseError
        On non-integer tokens or ids outside [0, n).
    """
    found: set[int] = set()
    for line, tokens in iter_records(text):
        for v in parse_ints(tokens, path=path, line=line):
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range [0, {n})", path=path, line=line)
            found.add(v)
    return frozenset(found)


def read_vertex_set(path: str | Path, n: int) -> frozenset[int]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc}", path=str(p)) from exc
    return parse_vertex_set(text, n, path=str(p))
