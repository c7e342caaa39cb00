"""
dclaw_py.solvers.exact
======================
Exact solvers: subset enumeration and the bounded search tree.

Purpose
-------
`solve_brute_force` is the independent oracle every other solver is tested
against. It tries target sizes t = 0, 1, 2, ... and returns the first
t-subset (in lexicographic order) whose deletion leaves no d-claw.

`solve_fpt` is the O*((d+1)^k) search tree: find a d-claw, branch on
deleting each of its d+1 vertices (center first, then leaves ascending),
recurse with budget k - 1.

`solve_min_fpt` iterates `solve_fpt` over k, starting at the greedy
vertex-disjoint claw packing bound. Claws never span two components, so it
solves each component separately and unions the results.

Public API
----------
- solve_brute_force
- solve_fpt
- solve_min_fpt
- packing_lower_bound
"""

from __future__ import annotations

from itertools import combinations

from ..claws.ops import DClaw, Solution, first_claw
from ..common.errors import BranchCapExceeded
from ..common.logging import get_logger
from ..config.settings import BRUTE_FORCE_WARN_N
from ..graph.core import Graph, connected_components, induced_subgraph

log = get_logger(__name__)


def solve_brute_force(g: Graph, d: int) -> Solution:
    """
    Minimum d-claw deletion set by exhaustive search.

    Parameters
    ----------
    g : Graph
    d : int
        Claw order, d >= 1.

    Returns
    -------
    Solution
        The lexicographically least minimum set, certified optimal.
    """
    if g.n > BRUTE_FORCE_WARN_N:
        log.warning("[dclaw_py.solvers.exact] brute force on n=%d vertices may take very long", g.n)

    for t in range(g.n + 1):
        for subset in combinations(range(g.n), t):
            if first_claw(g, d, frozenset(subset)) is None:
                return Solution.of(subset, d, certified=True, tag="brute")
    # unreachable: deleting every vertex always works
    raise AssertionError("no deletion set found")


def packing_claws(g: Graph, d: int) -> list[DClaw]:
    """Greedily pack vertex-disjoint d-claws (each next claw avoids all earlier ones)."""
    used: set[int] = set()
    packed: list[DClaw] = []
    while (claw := first_claw(g, d, used)) is not None:
        packed.append(claw)
        used.update(claw.vertices)
    return packed


def packing_lower_bound(g: Graph, d: int) -> int:
    """Number of greedily packed vertex-disjoint d-claws; a lower bound on the optimum."""
    return len(packing_claws(g, d))


class _SearchTree:
    """Depth-first bounded search tree sharing one node counter across calls."""

    def __init__(self, g: Graph, d: int, cap: int | None):
        self.g = g
        self.d = d
        self.cap = cap
        self.nodes = 0

    def search(self, k: int) -> list[int] | None:
        chosen: list[int] = []
        banned: set[int] = set()
        return list(chosen) if self._branch(k, chosen, banned) else None

    def _branch(self, k: int, chosen: list[int], banned: set[int]) -> bool:
        self.nodes += 1
        if self.cap is not None and self.nodes > self.cap:
            raise BranchCapExceeded(self.cap)

        claw = first_claw(self.g, self.d, banned)
        if claw is None:
            return True
        if k == 0:
            return False

        for v in claw.vertices:
            chosen.append(v)
            banned.add(v)
            if self._branch(k - 1, chosen, banned):
                return True
            banned.discard(v)
            chosen.pop()
        return False


def solve_fpt(g: Graph, d: int, k: int, *, branch_cap: int | None = None) -> Solution | None:
    """
    Decide whether a d-claw deletion set of size <= k exists.

    Parameters
    ----------
    g : Graph
    d : int
    k : int
        Budget; negative budgets fail immediately.
    branch_cap : int, optional
        Maximum number of search-tree nodes.

    Returns
    -------
    Solution | None
        The first set found under the fixed branch order (not necessarily
        minimum), or None if no set of size <= k exists.

    Raises
    ------
    BranchCapExceeded
        If the search visits more than `branch_cap` nodes.
    """
    if k < 0:
        return None
    tree = _SearchTree(g, d, branch_cap)
    found = tree.search(k)
    if found is None:
        return None
    return Solution.of(found, d, certified=False, tag="fpt", nodes=tree.nodes)


def solve_min_fpt(g: Graph, d: int, *, branch_cap: int | None = None) -> Solution:
    """
    Minimum d-claw deletion set by iterating the search tree over k.

    Each connected component is solved on its own, starting at its packing
    lower bound. `branch_cap` bounds the total number of search-tree nodes.

    Raises
    ------
    BranchCapExceeded
        If the total node count exceeds `branch_cap`.
    """
    total: list[int] = []
    lower = 0
    nodes = 0

    for comp in connected_components(g):
        if len(comp) < d + 1:
            continue
        sub = induced_subgraph(g, comp)
        lb = packing_lower_bound(sub.graph, d)
        lower += lb

        remaining = None if branch_cap is None else branch_cap - nodes
        tree = _SearchTree(sub.graph, d, remaining)
        k = lb
        while (found := tree.search(k)) is None:
            k += 1
        nodes += tree.nodes
        log.debug(
            "[dclaw_py.solvers.exact] component of %d vertices: lower bound %d, optimum %d",
            len(comp), lb, k,
        )
        total.extend(sub.to_old(found))

    return Solution.of(total, d, certified=True, tag="fpt", lower_bound=lower, nodes=nodes)
