"""
dclaw_py.solvers.bipartite
==========================
Closed form for complete bipartite graphs K_{X,Y}.

After a deletion, a vertex keeping neighbors on the other side centers a
d-claw iff at least d of them survive. A minimum solution therefore either
deletes one whole side, or keeps at most d-1 vertices on each side.
"""

from __future__ import annotations

from ..claws.ops import Solution, first_claw
from ..common.errors import NotCompleteBipartiteError
from ..common.logging import get_logger
from ..graph.core import Graph, complete_bipartite_sides

log = get_logger(__name__)


def solve_complete_bipartite(g: Graph, d: int) -> Solution:
    """
    Minimum d-claw deletion set of a complete bipartite graph.

    The size equals min(|X|, |Y|, max(|X|-(d-1), 0) + max(|Y|-(d-1), 0)),
    and 0 when the graph is already d-claw-free. Kept vertices are the
    lowest ids of each side.

    Raises
    ------
    NotCompleteBipartiteError
        If g is not a connected complete bipartite graph with an edge.
    """
    sides = complete_bipartite_sides(g)
    if sides is None:
        log.error("[dclaw_py.solvers.bipartite] input is not complete bipartite")
        raise NotCompleteBipartiteError("graph is not complete bipartite")

    if first_claw(g, d) is None:
        return Solution.of((), d, certified=True, tag="complete_bipartite")

    x, y = sorted(sides[0]), sorted(sides[1])
    keep = d - 1
    candidates = [
        tuple(x),
        tuple(y),
        tuple(sorted(x[keep:] + y[keep:])),
    ]
    best = min(candidates, key=lambda s: (len(s), s))
    return Solution.of(best, d, certified=True, tag="complete_bipartite")
