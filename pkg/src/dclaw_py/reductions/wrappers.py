"""
dclaw_py.reductions.wrappers
============================
Budget-preserving transformations around an arbitrary input graph.

- attach_leaves          vertex cover  -> d-claw deletion (same optimum)
- attach_leaves_degree2  same, leaves only on degree-2 vertices
- extend_claw_to_dclaw   claw deletion -> d-claw deletion, d > 3 (same optimum)
- wrap_diameter2         optimum + 1, diameter 2
- wrap_diameter3_bipartite  optimum + 2, bipartite of diameter 3

Each wrapper keeps the input vertices at ids 0..n-1 and appends new
vertices after them. The optional `k` is the source budget; the artifact
budget is k shifted by the wrapper's constant.
"""

from __future__ import annotations

from ..common.errors import NotBipartiteError, PreconditionError
from ..common.logging import get_logger
from ..graph.core import Graph, bipartition, diameter
from .base import GadgetBuilder, ReductionArtifact

log = get_logger(__name__)


def _originals(b: GadgetBuilder, g: Graph) -> None:
    for v in range(g.n):
        b.add(f"orig({v})")
    for u, v in g.edges():
        b.edge(f"orig({u})", f"orig({v})")


def _pendants(b: GadgetBuilder, v: int, count: int) -> list[int]:
    ids = []
    for t in range(count):
        b.edge(f"orig({v})", f"pendant({v})#{t}")
        ids.append(b.id(f"pendant({v})#{t}"))
    return ids


def _shift(k: int | None, by: int) -> int | None:
    return None if k is None else k + by


def attach_leaves(g: Graph, d: int, k: int | None = None) -> ReductionArtifact:
    """
    Attach d-1 pendant leaves to every vertex.

    g has a vertex cover of size <= k iff the result has a d-claw deletion
    set of size <= k.

    Raises
    ------
    PreconditionError
        If d < 2.
    """
    if d < 2:
        raise PreconditionError(f"attach_leaves needs d >= 2, got {d}")
    b = GadgetBuilder()
    _originals(b, g)
    leaves = {str(v): _pendants(b, v, d - 1) for v in range(g.n)}
    lg = b.build()
    return ReductionArtifact(
        kind="vc-leaves",
        graph=lg.graph,
        d=d,
        budget_k=k,
        vertex_labels=lg.labels,
        source_map={"original": list(range(g.n)), "leaves": leaves},
        metadata={"budget_shift": 0},
    )


def attach_leaves_degree2(g: Graph, d: int, k: int | None = None) -> ReductionArtifact:
    """
    Attach d-1 pendant leaves to every degree-2 vertex only.

    Applies to graphs in which every edge has an endpoint of degree 2 (for
    instance max-degree-3 graphs whose degree-3 vertices only see degree-2
    vertices); vertex cover and d-claw deletion optima then agree.

    Raises
    ------
    PreconditionError
        If d < 2 or some edge has no endpoint of degree 2.
    """
    if d < 2:
        raise PreconditionError(f"attach_leaves_degree2 needs d >= 2, got {d}")
    for u, v in g.edges():
        if g.degree(u) != 2 and g.degree(v) != 2:
            log.error("[dclaw_py.reductions.wrappers] edge (%d, %d) has no degree-2 endpoint", u, v)
            raise PreconditionError(f"edge ({u}, {v}) has no endpoint of degree 2")

    b = GadgetBuilder()
    _originals(b, g)
    leaves = {str(v): _pendants(b, v, d - 1) for v in range(g.n) if g.degree(v) == 2}
    lg = b.build()
    return ReductionArtifact(
        kind="vc-leaves-deg2",
        graph=lg.graph,
        d=d,
        budget_k=k,
        vertex_labels=lg.labels,
        source_map={"original": list(range(g.n)), "leaves": leaves},
        metadata={"budget_shift": 0, "source_max_degree": g.max_degree()},
    )


def extend_claw_to_dclaw(g: Graph, d: int, k: int | None = None) -> ReductionArtifact:
    """
    Attach d-3 pendants to every vertex, turning claw deletion into d-claw deletion.

    Raises
    ------
    PreconditionError
        If d <= 3.
    """
    if d <= 3:
        raise PreconditionError(f"extend_claw_to_dclaw needs d > 3, got {d}")
    b = GadgetBuilder()
    _originals(b, g)
    pendants = {str(v): _pendants(b, v, d - 3) for v in range(g.n)}
    lg = b.build()

    was_bipartite = bipartition(g).valid
    bound = g.max_degree() + d - 3
    assert bipartition(lg.graph).valid == was_bipartite
    assert lg.graph.max_degree() <= bound

    return ReductionArtifact(
        kind="claw-extend",
        graph=lg.graph,
        d=d,
        budget_k=k,
        vertex_labels=lg.labels,
        source_map={"original": list(range(g.n)), "pendants": pendants},
        metadata={
            "budget_shift": 0,
            "source_d": 3,
            "bipartite": was_bipartite,
            "max_degree_bound": bound,
        },
    )


def wrap_diameter2(g: Graph, d: int, k: int | None = None) -> ReductionArtifact:
    """
    Add a d-claw whose center is joined to every vertex.

    The optimum grows by exactly one and the diameter becomes 2.
    """
    if d < 2:
        raise PreconditionError(f"wrap_diameter2 needs d >= 2, got {d}")
    b = GadgetBuilder()
    _originals(b, g)
    hub = b.add("hub")
    leaves = []
    for t in range(d):
        b.edge("hub", f"hub_leaf#{t}")
        leaves.append(b.id(f"hub_leaf#{t}"))
    for v in range(g.n):
        b.edge("hub", f"orig({v})")
    lg = b.build()

    diam = diameter(lg.graph)
    assert diam == 2, f"diameter {diam}"
    return ReductionArtifact(
        kind="diam2",
        graph=lg.graph,
        d=d,
        budget_k=_shift(k, 1),
        vertex_labels=lg.labels,
        source_map={"original": list(range(g.n)), "hub": hub, "hub_leaves": leaves},
        metadata={"budget_shift": 1, "diameter": diam},
    )


def wrap_diameter3_bipartite(g: Graph, d: int, k: int | None = None) -> ReductionArtifact:
    """
    Add two adjacent d-claw centers x and y across a bipartite graph.

    With sides (X, Y), x is joined to Y and y, and y to X and x. The
    result is bipartite of diameter 3 and its optimum is two more.

    Raises
    ------
    NotBipartiteError
        If g has an odd cycle.
    """
    if d < 2:
        raise PreconditionError(f"wrap_diameter3_bipartite needs d >= 2, got {d}")
    bp = bipartition(g)
    if not bp.valid:
        log.error("[dclaw_py.reductions.wrappers] diameter-3 wrapper needs a bipartite graph")
        raise NotBipartiteError("input graph is not bipartite")

    b = GadgetBuilder()
    _originals(b, g)
    x, y = b.add("x_hub"), b.add("y_hub")
    b.edge("x_hub", "y_hub")
    for hub in ("x_hub", "y_hub"):
        for t in range(d):
            b.edge(hub, f"{hub}_leaf#{t}")
    for v in bp.part("right"):
        b.edge("x_hub", f"orig({v})")
    for v in bp.part("left"):
        b.edge("y_hub", f"orig({v})")
    lg = b.build()

    diam = diameter(lg.graph)
    assert bipartition(lg.graph).valid and diam == 3, f"diameter {diam}"
    return ReductionArtifact(
        kind="diam3-bip",
        graph=lg.graph,
        d=d,
        budget_k=_shift(k, 2),
        vertex_labels=lg.labels,
        source_map={
            "original": list(range(g.n)),
            "x": x,
            "y": y,
            "left": bp.part("left"),
            "right": bp.part("right"),
        },
        metadata={"budget_shift": 2, "diameter": diam, "bipartite": True},
    )
