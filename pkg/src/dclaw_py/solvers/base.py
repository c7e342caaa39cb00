"""
dclaw_py.solvers.base
=====================
Request type shared by the solver entry points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, get_args

from ..common.errors import PreconditionError
from ..graph.core import Graph

Algorithm = Literal["brute", "fpt", "greedy", "complete_bipartite", "dblock", "auto"]
ALGORITHMS: tuple[str, ...] = get_args(Algorithm)


@dataclass(frozen=True)
class SolveRequest:
    """
    One solver invocation.

    Attributes
    ----------
    graph : Graph
    d : int
        Claw order, d >= 1.
    budget_k : int | None
        Decision-mode budget, 0 <= k <= n; None for optimization mode.
    algorithm : Algorithm
        Solver tag, "auto" by default.
    branch_cap : int | None
        Node cap for the bounded search tree; None uses the configured default.
    """

    graph: Graph
    d: int
    budget_k: int | None = None
    algorithm: Algorithm = "auto"
    branch_cap: int | None = None

    def __post_init__(self) -> None:
        if self.d < 1:
            raise PreconditionError(f"claw order d must be >= 1, got {self.d}")
        if self.algorithm not in ALGORITHMS:
            raise PreconditionError(f"unknown algorithm {self.algorithm!r}; expected one of {', '.join(ALGORITHMS)}")
        if self.budget_k is not None and not 0 <= self.budget_k <= self.graph.n:
            raise PreconditionError(f"budget k must satisfy 0 <= k <= n = {self.graph.n}, got {self.budget_k}")
        if self.branch_cap is not None and self.branch_cap <= 0:
            raise PreconditionError(f"branch cap must be positive, got {self.branch_cap}")
