"""
dclaw_py.dblock.solve
=====================
Minimum d-claw deletion on d-block graphs in polynomial time.

Structure used
--------------
In a d-block graph every induced d-claw is centered at a cut vertex and
takes its d leaves from d distinct blocks (the neighborhood of a cut vertex
inside one block is a clique, and no block holds a d-claw). Hence G - S is
d-claw-free iff every cut vertex c outside S has fewer than d blocks B with
N(c) ∩ B not contained in S. Such a block is "active" for c.

Endvertices (non-cut vertices) never need to be deleted, and neither do
cut vertices that can be active in at most d-1 blocks (pseudo-endvertices):
any solution using one can swap it for the center of the claw it hits.

Elimination
-----------
The block-cut tree of each component is rooted at the block holding the
component's smallest vertex, and blocks are settled bottom-up. When block
B (parent cut p, or none at the root) is settled, every block below it is
final, so each child cut vertex w of B not yet deleted has a fixed number
a(w) of active child blocks:

- a(w) >= d: w is deleted.
- a(w) <= d-2: w is a pseudo-endvertex; it is never deleted.
- a(w) == d-1: w must be deleted unless all of N(w) ∩ B is deleted.
  If some neighbor of w in B is protected (an endvertex or a
  pseudo-endvertex) w is deleted. Otherwise every neighbor of w in B is a
  cut vertex, which forces B to be a clique with no protected vertex;
  then B minus one such w is deleted. This costs the same as deleting
  every candidate and also removes p, which is never worse.

Components with at most one non-endblock go through
`solve_single_nonendblock`, the same rules written against the
endblock counts of the input graph.

Public API
----------
- solve_single_nonendblock
- solve_d_block
"""

from __future__ import annotations

from typing import Any

from ..claws.ops import Solution, verify_deletion_set
from ..common.errors import NotDBlockError, PreconditionError
from ..common.logging import get_logger
from ..graph.blocks import BlockCutTree
from ..graph.core import Graph, connected_components, induced_subgraph, is_clique
from .recognize import DBlockAnalysis, is_d_block_graph

log = get_logger(__name__)


def _require_d_block(analysis: DBlockAnalysis) -> None:
    if not analysis.is_d_block:
        log.error(
            "[dclaw_py.dblock.solve] not a %d-block graph: block %s violates %s",
            analysis.d, analysis.violating_block, analysis.reason,
        )
        raise NotDBlockError(
            f"not a {analysis.d}-block graph (block {analysis.violating_block}: {analysis.reason})"
        )


def _check_solution(g: Graph, s: set[int], d: int) -> None:
    ok, witness = verify_deletion_set(g, s, d)
    if not ok:
        raise AssertionError(f"d-block elimination left claw {witness}")


# ----------------------------------------------------------------------
# At most one non-endblock
# ----------------------------------------------------------------------
def solve_single_nonendblock(g: Graph, d: int, analysis: DBlockAnalysis) -> Solution:
    """
    Solve a connected d-block graph with at most one non-endblock.

    Parameters
    ----------
    g : Graph
    d : int
    analysis : DBlockAnalysis
        Result of `is_d_block_graph(g, d)`.

    Returns
    -------
    Solution
        Certified optimal. `details` holds the vertex classes of the
        non-endblock when there is one.

    Raises
    ------
    NotDBlockError
        If the analysis is negative.
    PreconditionError
        If g is disconnected or has two or more non-endblocks.
    """
    _require_d_block(analysis)
    if len(connected_components(g)) > 1:
        raise PreconditionError("solve_single_nonendblock needs a connected graph")

    tree = analysis.tree
    non_end = [b for b in range(len(tree.blocks)) if not tree.is_endblock(b)]
    if len(non_end) > 1:
        raise PreconditionError(f"graph has {len(non_end)} non-endblocks, expected at most one")

    if not non_end:
        # star of endblocks around at most one cut vertex
        cuts = sorted(tree.cut_vertices)
        chosen = cuts if cuts and len(tree.blocks) >= d else []
        return Solution.of(chosen, d, certified=True, tag="dblock", case="all_endblocks")

    block = tree.blocks[non_end[0]]
    nb = g.neighbor_sets
    u_end, u_pseudo, x_set, w_set = [], [], [], []
    for v in sorted(block):
        role = analysis.vertex_roles[v]
        if role == "endvertex":
            u_end.append(v)
        elif role == "pseudo_endvertex":
            u_pseudo.append(v)
        elif tree.endblock_count[v] >= d:
            x_set.append(v)
        else:
            w_set.append(v)

    protected = set(u_end) | set(u_pseudo)
    y_set = [w for w in w_set if nb[w] & protected]
    z_set = [w for w in w_set if not nb[w] & protected]

    if not z_set:
        chosen = set(x_set) | set(y_set)
    else:
        if not is_clique(g, block):
            raise AssertionError(f"non-endblock {sorted(block)} with candidates {z_set} is not a clique")
        chosen = set(block) - {z_set[0]}

    _check_solution(g, chosen, d)
    return Solution.of(
        chosen, d, certified=True, tag="dblock",
        case="one_nonendblock", U_end=u_end, U_pseudo=u_pseudo, X=x_set, Y=y_set, Z=z_set,
    )


# ----------------------------------------------------------------------
# General elimination
# ----------------------------------------------------------------------
def _eliminate(g: Graph, d: int, tree: BlockCutTree, root: int) -> tuple[set[int], list[dict[str, Any]]]:
    rooted = tree.rooted(root)
    nb = g.neighbor_sets
    deleted: set[int] = set()
    trace: list[dict[str, Any]] = []

    def active_children(w: int) -> int:
        count = 0
        for c in rooted.child_blocks[w]:
            if any(x not in deleted for x in nb[w] if x in tree.blocks[c]):
                count += 1
        return count

    for b in rooted.postorder:
        cuts = rooted.child_cuts[b]
        if not cuts:
            continue
        block = tree.blocks[b]

        many, pseudo, borderline = [], [], []
        for w in cuts:
            if w in deleted:
                continue
            a = active_children(w)
            if a >= d:
                many.append(w)
            elif a <= d - 2:
                pseudo.append(w)
            else:
                borderline.append(w)

        deleted.update(many)
        protected = {v for v in block if v not in tree.cut_vertices} | set(pseudo)
        forced = [w for w in borderline if nb[w] & protected]
        free = [w for w in borderline if not nb[w] & protected]
        deleted.update(forced)

        spared = None
        if free:
            if not is_clique(g, block):
                raise AssertionError(f"block {sorted(block)} with candidates {free} is not a clique")
            spared = free[0]
            deleted.update(v for v in block if v != spared)

        step = {
            "block": sorted(block),
            "parent_cut": rooted.parent_cut[b],
            "deleted": sorted(many + forced),
            "pseudo_endvertices": pseudo,
            "spared": spared,
        }
        log.debug("[dclaw_py.dblock.solve] settled block %s", step)
        trace.append(step)

    return deleted, trace


def solve_d_block(g: Graph, d: int) -> Solution:
    """
    Minimum d-claw deletion set of a d-block graph.

    Components are solved independently and unioned.

    Parameters
    ----------
    g : Graph
    d : int
        Claw order, d >= 2.

    Returns
    -------
    Solution
        Certified optimal; `details["trace"]` lists the per-block decisions.

    Raises
    ------
    NotDBlockError
        If g is not a d-block graph.
    """
    analysis = is_d_block_graph(g, d)
    _require_d_block(analysis)
    tree = analysis.tree

    chosen: set[int] = set()
    trace: list[dict[str, Any]] = []
    for comp in connected_components(g):
        comp_blocks = sorted({b for v in comp for b in tree.blocks_of(v)})
        non_end = [b for b in comp_blocks if not tree.is_endblock(b)]

        if len(non_end) <= 1:
            if len(comp_blocks) == 1:
                continue
            sub = induced_subgraph(g, comp)
            part = solve_single_nonendblock(sub.graph, d, is_d_block_graph(sub.graph, d))
            chosen.update(sub.to_old(part.vertices))
            continue

        part_set, part_trace = _eliminate(g, d, tree, comp_blocks[0])
        chosen.update(part_set)
        trace.extend(part_trace)

    _check_solution(g, chosen, d)
    return Solution.of(chosen, d, certified=True, tag="dblock", trace=trace)
