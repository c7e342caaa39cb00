"""
dclaw_py.common.hashing
=======================
Deterministic hashing utilities for dclaw reports and artifacts.

Graphs are fingerprinted through their canonical edge-list text (the same
text the writer in `dclaw_py.graph.io` emits), so a graph written to disk
and parsed back keeps its fingerprint.

Typical usage
-------------
key = graph_fingerprint(g.n, g.edges())

The key is echoed in CLI reports and stored in reduction sidecars, and
it names suite artifact folders when several instances share a name.
"""

from __future__ import annotations
import hashlib
from pathlib import Path
from typing import Iterable


def sha256_text(s: str) -> str:
    """
    Compute SHA-256 hash of a UTF-8 encoded string.

    Parameters
    ----------
    s : str
        Input string.

    Returns
    -------
    str
        Hexadecimal SHA-256 digest (64 characters).
    """
    return hashlib.sha256(s.encode("utf-8")).hexdigest()


def sha256_file(path: Path) -> str:
    """
    Compute SHA-256 hash of a file's contents, read in 1MB chunks.
    """
    h = hashlib.sha256()

    with path.open("rb") as f:
        while True:
            b = f.read(1024 * 1024)
            if not b:
                break
            h.update(b)

    return h.hexdigest()


def canonical_edge_text(n: int, edges: Iterable[tuple[int, int]]) -> str:
    """
    Render a graph in the canonical edge-list format (no comments).

    Edges are normalized to u < v and sorted lexicographically.
    """
    norm = sorted((min(u, v), max(u, v)) for u, v in edges)
    lines = [f"{n} {len(norm)}"]
    lines.extend(f"{u} {v}" for u, v in norm)
    return "\n".join(lines) + "\n"


def graph_fingerprint(n: int, edges: Iterable[tuple[int, int]], *, extra: str = "") -> str:
    """
    Generate a deterministic 16-hex key for a graph.

    Parameters
    ----------
    n : int
        Vertex count.
    edges : Iterable[tuple[int, int]]
        Undirected edges in any order.
    extra : str, optional
        Additional context mixed into the key (e.g. "d=3").

    Returns
    -------
    str
        16-character short hash key.
    """
    combined = f"{sha256_text(canonical_edge_text(n, edges))}|{extra}"
    return sha256_text(combined)[:16]
