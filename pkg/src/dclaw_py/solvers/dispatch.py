"""
dclaw_py.solvers.dispatch
=========================
Algorithm selection for a `SolveRequest`.

Auto routing
------------
1. d-claw-free input                -> empty set ("trivial")
2. complete bipartite               -> closed form
3. d-block graph (d >= 2)           -> d-block elimination
4. n <= AUTO_BRUTE_FORCE_MAX_N      -> brute force
5. otherwise                        -> iterated search tree under the branch
                                       cap, falling back to greedy (uncertified)
                                       when the cap is hit

Forced algorithms skip the routing and propagate their precondition errors.

Decision mode
-------------
`solve_decision` answers "is there a set of size <= k?". The fpt algorithm
answers it directly with one bounded search; every other algorithm solves
the optimization problem and compares. An uncertified result larger than k
cannot prove "no", so that case is reported as unknown (None answer).

Public API
----------
- solve_auto
- solve_decision
- Decision
"""

from __future__ import annotations

from dataclasses import dataclass

from ..claws.ops import Solution, first_claw
from ..common.errors import BranchCapExceeded
from ..common.logging import get_logger
from ..config.settings import AUTO_BRUTE_FORCE_MAX_N, default_branch_cap
from ..dblock.recognize import is_d_block_graph
from ..dblock.solve import solve_d_block
from ..graph.core import complete_bipartite_sides
from .approx import greedy_approx
from .base import SolveRequest
from .bipartite import solve_complete_bipartite
from .exact import solve_brute_force, solve_fpt, solve_min_fpt

log = get_logger(__name__)


def _cap(req: SolveRequest) -> int:
    return req.branch_cap if req.branch_cap is not None else default_branch_cap()


def _route(req: SolveRequest) -> Solution:
    g, d = req.graph, req.d

    if first_claw(g, d) is None:
        log.info("[dclaw_py.solvers.dispatch] input is %d-claw-free", d)
        return Solution.of((), d, certified=True, tag="trivial")

    if complete_bipartite_sides(g) is not None:
        log.info("[dclaw_py.solvers.dispatch] routed to complete_bipartite")
        return solve_complete_bipartite(g, d)

    if d >= 2 and is_d_block_graph(g, d).is_d_block:
        log.info("[dclaw_py.solvers.dispatch] routed to dblock")
        return solve_d_block(g, d)

    if g.n <= AUTO_BRUTE_FORCE_MAX_N:
        log.info("[dclaw_py.solvers.dispatch] routed to brute force (n=%d)", g.n)
        return solve_brute_force(g, d)

    cap = _cap(req)
    log.info("[dclaw_py.solvers.dispatch] routed to fpt with branch cap %d", cap)
    try:
        return solve_min_fpt(g, d, branch_cap=cap)
    except BranchCapExceeded:
        log.warning("[dclaw_py.solvers.dispatch] branch cap %d hit; falling back to greedy", cap)
        sol = greedy_approx(g, d)
        return Solution.of(
            sol.vertices, d, certified=False, tag="greedy",
            fallback_from="fpt", branch_cap=cap, **sol.details,
        )


def solve_auto(req: SolveRequest) -> Solution:
    """
    Solve `req` in optimization mode with the requested algorithm.

    Parameters
    ----------
    req : SolveRequest

    Returns
    -------
    Solution

    Raises
    ------
    PreconditionError
        From a forced algorithm applied outside its domain.
    BranchCapExceeded
        From a forced fpt run exceeding its cap.
    """
    g, d = req.graph, req.d
    match req.algorithm:
        case "auto":
            return _route(req)
        case "brute":
            return solve_brute_force(g, d)
        case "fpt":
            return solve_min_fpt(g, d, branch_cap=_cap(req))
        case "greedy":
            return greedy_approx(g, d)
        case "complete_bipartite":
            return solve_complete_bipartite(g, d)
        case "dblock":
            return solve_d_block(g, d)
    raise AssertionError(f"unhandled algorithm {req.algorithm!r}")


@dataclass(frozen=True)
class Decision:
    """
    Decision-mode outcome.

    `answer` is True/False, or None when an uncertified solver could not
    settle it. `solution` is the witness (or the best set found).
    """

    k: int
    answer: bool | None
    solution: Solution | None


def solve_decision(req: SolveRequest) -> Decision:
    """Answer whether a d-claw deletion set of size <= req.budget_k exists."""
    if req.budget_k is None:
        raise ValueError("solve_decision needs a budget k")
    k = req.budget_k

    if req.algorithm == "fpt":
        sol = solve_fpt(req.graph, req.d, k, branch_cap=_cap(req))
        return Decision(k, sol is not None, sol)

    sol = solve_auto(req)
    if sol.size <= k:
        return Decision(k, True, sol)
    return Decision(k, False if sol.certified_optimal else None, sol)
