"""
dclaw_py.reductions.split
=========================
r-uniform hypergraph vertex cover -> d-claw deletion on split graphs,
d = r + 1.

Construction
------------
For a hypergraph with n vertices and m edges:

- independent set I = {v' : v in V}, vertex ids 0..n-1, labels "I(v)";
- for every edge e a block Q(e) of n vertices, labels "Q(e<idx>)#t";
  all Q vertices together form one clique;
- v' is joined to every vertex of Q(e) iff v is in e.

The result has nm + n vertices, no induced (d+1)-claw, and its minimum
d-claw deletion set has the size of a minimum vertex cover. This needs
every edge to have a disjoint partner edge, which is checked.
"""

from __future__ import annotations

from typing import Callable, Iterable, Literal

from ..claws.ops import first_claw
from ..common.errors import DisjointEdgeError, PreconditionError, UniformityError
from ..common.logging import get_logger
from ..graph.core import is_clique, is_independent
from .base import GadgetBuilder, Hypergraph, ReductionArtifact

log = get_logger(__name__)

Direction = Literal["vc_to_claw", "claw_to_vc"]


def _check_disjoint_partners(h: Hypergraph) -> None:
    sets = [frozenset(e) for e in h.edges]
    for idx, e in enumerate(sets):
        if not any(e.isdisjoint(f) for f in sets):
            log.error("[dclaw_py.reductions.split] edge %d %s meets every other edge", idx, sorted(e))
            raise DisjointEdgeError(f"edge {sorted(e)} has no disjoint partner edge")


def reduce_hvc_to_split(h: Hypergraph, d: int | None = None, k: int | None = None) -> ReductionArtifact:
    """
    Build the split-graph instance of a uniform hypergraph.

    Parameters
    ----------
    h : Hypergraph
        r-uniform, every edge disjoint from some other edge.
    d : int, optional
        Must equal r + 1 when given.
    k : int, optional
        Vertex cover budget, carried over unchanged.

    Raises
    ------
    UniformityError
        If d is given and differs from r + 1.
    DisjointEdgeError
        If some edge intersects every other edge (including m <= 1).
    """
    if d is not None and d != h.r + 1:
        raise UniformityError(f"hypergraph is {h.r}-uniform, so d must be {h.r + 1}, got {d}")
    d = h.r + 1
    _check_disjoint_partners(h)

    b = GadgetBuilder()
    for v in range(h.n):
        b.add(f"I({v})")
    for idx in range(h.m):
        for t in range(h.n):
            b.add(f"Q(e{idx})#{t}")
    q_labels = [f"Q(e{idx})#{t}" for idx in range(h.m) for t in range(h.n)]
    for a in range(len(q_labels)):
        for c in range(a + 1, len(q_labels)):
            b.edge(q_labels[a], q_labels[c])
    for idx, e in enumerate(h.edges):
        for v in e:
            for t in range(h.n):
                b.edge(f"I({v})", f"Q(e{idx})#{t}")
    lg = b.build()

    independent = list(range(h.n))
    clique = [lg.vertex(x) for x in q_labels]
    assert lg.graph.n == h.n * h.m + h.n
    assert is_independent(lg.graph, independent) and is_clique(lg.graph, clique), "output is not split"
    assert first_claw(lg.graph, d + 1) is None, "output has an induced (d+1)-claw"

    return ReductionArtifact(
        kind="hvc-split",
        graph=lg.graph,
        d=d,
        budget_k=k,
        vertex_labels=lg.labels,
        source_map={
            "n": h.n,
            "r": h.r,
            "edges": [list(e) for e in h.edges],
            "I": independent,
            "Q": {str(idx): [lg.vertex(f"Q(e{idx})#{t}") for t in range(h.n)] for idx in range(h.m)},
        },
        metadata={"split": True, "no_induced_claw_of_order": d + 1, "vertex_count": "nm+n"},
    )


def solution_maps_split(artifact: ReductionArtifact, direction: Direction) -> Callable[[Iterable[int]], list[int]]:
    """
    Set translation between covers and deletion sets.

    vc_to_claw maps a cover S to {v' : v in S}; claw_to_vc maps a deletion
    set S' with |S'| < n to {v : v' in S'}.

    Raises
    ------
    PreconditionError
        If the artifact is not a split reduction or the direction is unknown.
        The returned claw_to_vc mapper raises it for |S'| >= n.
    """
    if artifact.kind != "hvc-split":
        raise PreconditionError(f"artifact kind {artifact.kind!r} is not a split reduction")
    n = artifact.source_map["n"]
    independent = artifact.source_map["I"]

    if direction == "vc_to_claw":
        def forward(cover: Iterable[int]) -> list[int]:
            return sorted(independent[v] for v in set(cover))
        return forward

    if direction == "claw_to_vc":
        position = {vid: v for v, vid in enumerate(independent)}

        def backward(deletion: Iterable[int]) -> list[int]:
            s = set(deletion)
            if len(s) >= n:
                raise PreconditionError(f"deletion set of size {len(s)} is not below n = {n}")
            return sorted(position[x] for x in s if x in position)
        return backward

    raise PreconditionError(f"unknown direction {direction!r}")
