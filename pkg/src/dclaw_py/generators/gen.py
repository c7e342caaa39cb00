"""
dclaw_py.generators.gen
=======================
Seeded random instances for the property-test corpora and acceptance suites.

Purpose
-------
`gen(GenSpec(model, params, seed))` returns a Graph, Hypergraph or
NaeFormula. All randomness comes from one `numpy.random.default_rng(seed)`
per call, so an identical GenSpec yields an identical instance.

Models
------
gnp                 n, p
block_graph         n, max_block=4
d_block_graph       n, d, max_block=4, cycle_prob=0.3, max_cycle=6
nae_formula         n, m, satisfiable=False
uniform_hypergraph  n, m, r, require_disjoint=False
complete_bipartite  a, b

Design notes
------------
Block models grow a random tree of blocks: each new block shares exactly
one existing vertex (its attachment vertex) with the graph. Clique blocks
satisfy every d-block condition. For d >= 3 a block may instead be an
"ear": a cycle c_0 .. c_{L-1} (L >= 4) plus the attachment vertex a joined
to c_0 and c_1. Only a may be a cut vertex of an ear, so the cycle
vertices are sealed against later attachments. Models that filter (nae
satisfiability, disjoint partners, d-block recognition) redraw up to
`MAX_RETRIES` times and then raise GenerationError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from ..common.errors import GenerationError
from ..common.logging import get_logger
from ..dblock.recognize import is_d_block_graph
from ..graph.core import Graph, from_edge_list
from ..reductions.base import Hypergraph, NaeFormula
from ..reductions.oracles import nae_oracle

log = get_logger(__name__)

MODELS = ("gnp", "block_graph", "d_block_graph", "nae_formula", "uniform_hypergraph", "complete_bipartite")
MAX_RETRIES = 200

Instance = Graph | Hypergraph | NaeFormula


@dataclass(frozen=True)
class GenSpec:
    """
    Generator request.

    Attributes
    ----------
    model : str
        One of `MODELS`.
    params : Mapping[str, Any]
        Size parameters of the model.
    seed : int
        Seed of the numpy generator (any 64-bit integer).
    """

    model: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"model": self.model, "params": dict(self.params), "seed": self.seed}


def _int_param(params: Mapping[str, Any], key: str, default: int | None = None, *, low: int = 0) -> int:
    if key not in params and default is None:
        raise ValueError(f"missing generator parameter {key!r}")
    value = int(params.get(key, default))
    if value < low:
        raise ValueError(f"generator parameter {key} must be >= {low}, got {value}")
    return value


def _float_param(params: Mapping[str, Any], key: str, default: float | None = None) -> float:
    if key not in params and default is None:
        raise ValueError(f"missing generator parameter {key!r}")
    value = float(params.get(key, default))
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"generator parameter {key} must lie in [0, 1], got {value}")
    return value


# ----------------------------------------------------------------------
# Graph models
# ----------------------------------------------------------------------
def _gnp(rng: np.random.Generator, params: Mapping[str, Any]) -> Graph:
    n = _int_param(params, "n")
    p = _float_param(params, "p")
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.size) < p
    return from_edge_list(n, zip(iu[mask].tolist(), ju[mask].tolist()))


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[a], vertices[b]) for a in range(len(vertices)) for b in range(a + 1, len(vertices))]


def _block_tree(
    rng: np.random.Generator,
    n: int,
    max_block: int,
    *,
    cycle_prob: float = 0.0,
    max_cycle: int = 6,
) -> Graph:
    if n < 1:
        raise ValueError(f"block models need n >= 1, got {n}")
    if max_block < 2:
        raise ValueError(f"max_block must be >= 2, got {max_block}")

    first = min(n, int(rng.integers(1, max_block + 1)))
    edges = _clique_edges(list(range(first)))
    open_vertices = list(range(first))
    count = first

    while count < n:
        anchor = open_vertices[int(rng.integers(len(open_vertices)))]
        remaining = n - count
        use_ear = cycle_prob > 0 and remaining >= 4 and rng.random() < cycle_prob
        if use_ear:
            length = int(rng.integers(4, min(max_cycle, remaining) + 1))
            ring = list(range(count, count + length))
            edges.extend(zip(ring, ring[1:] + ring[:1]))
            edges.extend([(anchor, ring[0]), (anchor, ring[1])])
            count += length
        else:
            size = min(int(rng.integers(2, max_block + 1)), remaining + 1)
            block = [anchor, *range(count, count + size - 1)]
            edges.extend(_clique_edges(block))
            open_vertices.extend(block[1:])
            count += size - 1

    return from_edge_list(n, edges)


def _block_graph(rng: np.random.Generator, params: Mapping[str, Any]) -> Graph:
    return _block_tree(rng, _int_param(params, "n", low=1), _int_param(params, "max_block", 4))


def _d_block_graph(rng: np.random.Generator, params: Mapping[str, Any]) -> Graph:
    n = _int_param(params, "n", low=1)
    d = _int_param(params, "d", low=2)
    max_block = _int_param(params, "max_block", 4)
    cycle_prob = _float_param(params, "cycle_prob", 0.3) if d >= 3 else 0.0
    max_cycle = _int_param(params, "max_cycle", 6, low=4)

    for attempt in range(MAX_RETRIES):
        g = _block_tree(rng, n, max_block, cycle_prob=cycle_prob, max_cycle=max_cycle)
        if is_d_block_graph(g, d).is_d_block:
            return g
        log.debug("[dclaw_py.generators.gen] d_block_graph attempt %d rejected", attempt)
    raise GenerationError(f"no {d}-block graph after {MAX_RETRIES} attempts")


def _complete_bipartite(rng: np.random.Generator, params: Mapping[str, Any]) -> Graph:
    a = _int_param(params, "a", low=1)
    b = _int_param(params, "b", low=1)
    return from_edge_list(a + b, [(x, a + y) for x in range(a) for y in range(b)])


# ----------------------------------------------------------------------
# Source-instance models
# ----------------------------------------------------------------------
def _nae_formula(rng: np.random.Generator, params: Mapping[str, Any]) -> NaeFormula:
    n = _int_param(params, "n", low=3)
    m = _int_param(params, "m")
    satisfiable = bool(params.get("satisfiable", False))

    for _ in range(MAX_RETRIES):
        clauses = [tuple(int(x) + 1 for x in rng.choice(n, size=3, replace=False)) for _ in range(m)]
        f = NaeFormula.of(n, clauses)
        if not satisfiable or nae_oracle(f) is not None:
            return f
    raise GenerationError(f"no nae-satisfiable formula (n={n}, m={m}) after {MAX_RETRIES} attempts")


def _has_disjoint_partners(edges: list[tuple[int, ...]]) -> bool:
    sets = [frozenset(e) for e in edges]
    return all(any(e.isdisjoint(f) for f in sets) for e in sets)


def _uniform_hypergraph(rng: np.random.Generator, params: Mapping[str, Any]) -> Hypergraph:
    n = _int_param(params, "n", low=1)
    m = _int_param(params, "m")
    r = _int_param(params, "r", 2, low=2)
    require_disjoint = bool(params.get("require_disjoint", False))
    if r > n:
        raise ValueError(f"uniformity r={r} exceeds n={n}")

    for _ in range(MAX_RETRIES):
        edges = [tuple(sorted(int(v) for v in rng.choice(n, size=r, replace=False))) for _ in range(m)]
        if len(set(edges)) != len(edges):
            continue
        if require_disjoint and not _has_disjoint_partners(edges):
            continue
        return Hypergraph.of(n, r, edges)
    raise GenerationError(f"no {r}-uniform hypergraph (n={n}, m={m}) after {MAX_RETRIES} attempts")


_BUILDERS = {
    "gnp": _gnp,
    "block_graph": _block_graph,
    "d_block_graph": _d_block_graph,
    "nae_formula": _nae_formula,
    "uniform_hypergraph": _uniform_hypergraph,
    "complete_bipartite": _complete_bipartite,
}


def gen(spec: GenSpec) -> Instance:
    """
    Draw one instance.

    Raises
    ------
    ValueError
        Unknown model or out-of-range parameters.
    GenerationError
        A filtering model exhausted its retries.
    """
    try:
        builder = _BUILDERS[spec.model]
    except KeyError:
        log.error("[dclaw_py.generators.gen] unknown model %r", spec.model)
        raise ValueError(f"unknown generator model {spec.model!r}; expected one of {MODELS}") from None
    rng = np.random.default_rng(spec.seed)
    return builder(rng, spec.params)
