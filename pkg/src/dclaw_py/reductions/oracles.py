"""
dclaw_py.reductions.oracles
===========================
Exhaustive oracles for the source problems of the reductions.

Both are deterministic: `nae_oracle` returns the least assignment in
binary order (False < True, variable n varying fastest) and `hvc_oracle`
the lexicographically least cover among those of minimum size.
"""

from __future__ import annotations

from itertools import combinations, product

from ..common.logging import get_logger
from ..graph.core import Graph
from .base import Hypergraph, NaeFormula

log = get_logger(__name__)

NAE_ORACLE_WARN_N = 25
HVC_ORACLE_WARN_N = 20


def nae_oracle(f: NaeFormula) -> tuple[bool, ...] | None:
    """First nae assignment of f in binary order, or None if unsatisfiable."""
    if f.n > NAE_ORACLE_WARN_N:
        log.warning("[dclaw_py.reductions.oracles] nae oracle on %d variables", f.n)
    for assignment in product((False, True), repeat=f.n):
        if f.is_nae(assignment):
            return assignment
    return None


def _is_cover(edges: list[frozenset[int]], s: frozenset[int]) -> bool:
    return all(not e.isdisjoint(s) for e in edges)


def hvc_oracle(h: Hypergraph) -> list[int]:
    """
    Minimum vertex cover of a hypergraph by subset enumeration.

    Returns
    -------
    list[int]
        Sorted, lexicographically least among minimum covers.
    """
    if h.n > HVC_ORACLE_WARN_N:
        log.warning("[dclaw_py.reductions.oracles] hypergraph cover oracle on %d vertices", h.n)
    edges = [frozenset(e) for e in h.edges]
    for size in range(h.n + 1):
        for cand in combinations(range(h.n), size):
            if _is_cover(edges, frozenset(cand)):
                return list(cand)
    raise AssertionError("the full vertex set is always a cover")


def graph_vertex_cover(g: Graph) -> list[int]:
    """Minimum vertex cover of a graph, via the 2-uniform hypergraph oracle."""
    return hvc_oracle(Hypergraph.of(g.n, 2, g.edges()))
