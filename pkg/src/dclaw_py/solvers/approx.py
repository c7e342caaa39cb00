"""
dclaw_py.solvers.approx
=======================
(d+1)-approximation: repeatedly delete every vertex of some d-claw.

The deleted claws are vertex-disjoint, and any solution must hit each of
them, so the result has size at most (d+1) times the optimum.
"""

from __future__ import annotations

from ..claws.ops import Solution
from ..graph.core import Graph
from .exact import packing_claws


def greedy_approx(g: Graph, d: int) -> Solution:
    claws = packing_claws(g, d)
    deleted = [v for claw in claws for v in claw.vertices]
    return Solution.of(deleted, d, certified=False, tag="greedy", lower_bound=len(claws))
