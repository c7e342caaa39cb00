"""
dclaw_py.graph.blocks
=====================
Blocks, cut vertices and the block-cut tree.

A block is a maximal biconnected subgraph; bridges are 2-vertex blocks and
isolated vertices are singleton blocks, so every vertex lies in at least
one block. Blocks are ordered by their sorted vertex tuple, which puts the
block with the smallest vertex first and breaks ties deterministically.

The incidence structure (block index, cut vertex) is a forest with one tree
per connected component. `BlockCutTree.rooted` orients one component's
tree from a root block, which is the view the d-block solver works on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import networkx as nx

from .core import Graph

VertexRole = Literal["endvertex", "cut"]


@dataclass(frozen=True)
class RootedBlockTree:
    """
    One component's block-cut tree oriented away from `root`.

    Attributes
    ----------
    root : int
        Root block index.
    parent_cut : dict[int, int | None]
        Parent cut vertex of each block (None for the root).
    child_cuts : dict[int, tuple[int, ...]]
        Cut vertices of each block other than its parent cut.
    child_blocks : dict[int, tuple[int, ...]]
        Blocks of each cut vertex other than its parent block.
    postorder : tuple[int, ...]
        Block indices, every block after all of its descendants.
    """

    root: int
    parent_cut: dict[int, int | None]
    child_cuts: dict[int, tuple[int, ...]]
    child_blocks: dict[int, tuple[int, ...]]
    postorder: tuple[int, ...]


@dataclass(frozen=True)
class BlockCutTree:
    """
    Blocks, cut vertices and their incidence pairs.

    Attributes
    ----------
    blocks : tuple[frozenset[int], ...]
        Vertex set of every block, in deterministic order.
    cut_vertices : frozenset[int]
        Vertices lying in two or more blocks.
    tree_edges : tuple[tuple[int, int], ...]
        (block index, cut vertex) incidences, sorted.
    vertex_roles : tuple[VertexRole, ...]
        "cut" or "endvertex" per vertex.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]
    vertex_roles: tuple[VertexRole, ...]
    membership: tuple[tuple[int, ...], ...] = field(repr=False)

    def blocks_of(self, v: int) -> tuple[int, ...]:
        """Indices of the blocks containing v."""
        return self.membership[v]

    def cuts_in(self, b: int) -> tuple[int, ...]:
        return tuple(sorted(v for v in self.blocks[b] if v in self.cut_vertices))

    def is_endblock(self, b: int) -> bool:
        """A block with at most one cut vertex."""
        return sum(1 for v in self.blocks[b] if v in self.cut_vertices) <= 1

    @cached_property
    def endblock_count(self) -> tuple[int, ...]:
        """Per vertex, how many endblocks contain it."""
        counts = [0] * len(self.membership)
        for b, verts in enumerate(self.blocks):
            if self.is_endblock(b):
                for v in verts:
                    counts[v] += 1
        return tuple(counts)

    def rooted(self, root: int) -> RootedBlockTree:
        """Orient the tree of root's component, breadth-first from `root`."""
        parent_cut: dict[int, int | None] = {root: None}
        child_cuts: dict[int, tuple[int, ...]] = {}
        child_blocks: dict[int, tuple[int, ...]] = {}
        order: list[int] = []

        queue = deque([root])
        while queue:
            b = queue.popleft()
            order.append(b)
            cuts = tuple(c for c in self.cuts_in(b) if c != parent_cut[b])
            child_cuts[b] = cuts
            for c in cuts:
                kids = tuple(x for x in self.membership[c] if x != b)
                child_blocks[c] = kids
                for x in kids:
                    parent_cut[x] = c
                    queue.append(x)

        return RootedBlockTree(
            root=root,
            parent_cut=parent_cut,
            child_cuts=child_cuts,
            child_blocks=child_blocks,
            postorder=tuple(reversed(order)),
        )


def block_cut_tree(g: Graph) -> BlockCutTree:
    """
    Compute the blocks and cut vertices of g.

    Parameters
    ----------
    g : Graph

    Returns
    -------
    BlockCutTree
        Blocks ordered by sorted vertex tuple; isolated vertices are
        singleton blocks.
    """
    G = g.to_networkx()
    found = [frozenset(c) for c in nx.biconnected_components(G)]
    found.extend(frozenset([v]) for v in range(g.n) if g.degree(v) == 0)
    blocks = tuple(sorted(found, key=lambda b: tuple(sorted(b))))

    membership: list[list[int]] = [[] for _ in range(g.n)]
    for i, b in enumerate(blocks):
        for v in b:
            membership[v].append(i)

    cuts = frozenset(v for v in range(g.n) if len(membership[v]) >= 2)
    tree_edges = tuple(sorted((i, v) for i, b in enumerate(blocks) for v in b if v in cuts))
    roles: tuple[VertexRole, ...] = tuple("cut" if v in cuts else "endvertex" for v in range(g.n))

    return BlockCutTree(
        blocks=blocks,
        cut_vertices=cuts,
        tree_edges=tree_edges,
        vertex_roles=roles,
        membership=tuple(tuple(m) for m in membership),
    )
