"""
dclaw_py.dblock.recognize
=========================
Recognition of d-block graphs.

A graph is a d-block graph if every block B satisfies:

1. B (as an induced subgraph) has no induced d-claw;
2. every cut vertex v of G in B has a clique neighborhood N(v) ∩ B;
3. the cut vertices of G lying in B induce a clique.

Block graphs are exactly the 2-block graphs, and every d-block graph is a
(d+1)-block graph.

Vertex roles
------------
endvertex         non-cut vertex
pseudo_endvertex  cut vertex in at most d-2 endblocks and exactly one non-endblock
other_cut         any other cut vertex
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..claws.ops import first_claw
from ..common.errors import PreconditionError
from ..common.logging import get_logger
from ..graph.blocks import BlockCutTree, block_cut_tree
from ..graph.core import Graph, induced_subgraph, is_clique

log = get_logger(__name__)

Violation = Literal["has_d_claw", "cutvertex_neighborhood_not_clique", "cutvertices_not_clique"]
DBlockRole = Literal["endvertex", "pseudo_endvertex", "other_cut"]


@dataclass(frozen=True)
class DBlockAnalysis:
    """
    Result of `is_d_block_graph`.

    Attributes
    ----------
    d : int
    is_d_block : bool
    violating_block : int | None
        Index (into `tree.blocks`) of the first block breaking a condition.
    reason : Violation | None
    vertex_roles : tuple[DBlockRole, ...]
    tree : BlockCutTree
    """

    d: int
    is_d_block: bool
    violating_block: int | None
    reason: Violation | None
    vertex_roles: tuple[DBlockRole, ...]
    tree: BlockCutTree

    def vertices_with_role(self, role: DBlockRole) -> list[int]:
        return [v for v, r in enumerate(self.vertex_roles) if r == role]


def _roles(tree: BlockCutTree, d: int) -> tuple[DBlockRole, ...]:
    roles: list[DBlockRole] = []
    for v, base in enumerate(tree.vertex_roles):
        if base == "endvertex":
            roles.append("endvertex")
            continue
        ends = tree.endblock_count[v]
        non_ends = len(tree.blocks_of(v)) - ends
        roles.append("pseudo_endvertex" if ends <= d - 2 and non_ends == 1 else "other_cut")
    return tuple(roles)


def _block_violation(g: Graph, tree: BlockCutTree, b: int, d: int) -> Violation | None:
    block = tree.blocks[b]
    sub = induced_subgraph(g, block)
    if first_claw(sub.graph, d) is not None:
        return "has_d_claw"

    cuts = tree.cuts_in(b)
    for v in cuts:
        if not is_clique(g, [w for w in g.adjacency[v] if w in block]):
            return "cutvertex_neighborhood_not_clique"
    if not is_clique(g, cuts):
        return "cutvertices_not_clique"
    return None


def is_d_block_graph(g: Graph, d: int) -> DBlockAnalysis:
    """
    Check the three d-block conditions block by block.

    Parameters
    ----------
    g : Graph
    d : int
        Claw order, d >= 2.

    Returns
    -------
    DBlockAnalysis
        The first violation in block order, or a positive answer.

    Raises
    ------
    PreconditionError
        If d < 2.
    """
    if d < 2:
        log.error("[dclaw_py.dblock.recognize] d-block graphs need d >= 2, got %d", d)
        raise PreconditionError(f"d-block recognition needs d >= 2, got {d}")

    tree = block_cut_tree(g)
    roles = _roles(tree, d)
    for b in range(len(tree.blocks)):
        reason = _block_violation(g, tree, b, d)
        if reason is not None:
            log.debug("[dclaw_py.dblock.recognize] block %d violates %s", b, reason)
            return DBlockAnalysis(d, False, b, reason, roles, tree)
    return DBlockAnalysis(d, True, None, None, roles, tree)
