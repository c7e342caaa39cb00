"""
dclaw_py.graph.core
===================
Undirected simple graphs and the structural primitives the solvers consume.

Purpose
-------
`Graph` is an immutable adjacency-list graph on vertices 0..n-1. All
operations here are pure functions of their inputs; a graph value can be
shared freely between solvers, reductions and threads.

Every ordering is deterministic: adjacency lists are sorted and component
lists are keyed by their smallest vertex, so downstream solvers are
reproducible without seeds.

Public API
----------
- Graph, Bipartition, RemappedGraph
- from_edge_list
- delete_vertices, induced_subgraph
- connected_components
- bipartition
- diameter
- is_clique, is_independent
- complete_bipartite_sides
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

import networkx as nx

from ..common.errors import DuplicateEdgeError, SelfLoopError, VertexRangeError
from ..common.logging import get_logger

log = get_logger(__name__)

Side = Literal["left", "right"]


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph with sorted adjacency lists.

    Construct through `from_edge_list`; the constructor itself trusts its
    arguments.

    Attributes
    ----------
    n : int
        Number of vertices.
    adjacency : tuple[tuple[int, ...], ...]
        Sorted neighbor ids per vertex.
    edge_count : int
        Number of edges.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G


@dataclass(frozen=True)
class RemappedGraph:
    """A derived graph plus the map from its vertex ids back to the source ids."""

    graph: Graph
    old_ids: tuple[int, ...]

    def to_old(self, vertices: Iterable[int]) -> list[int]:
        return sorted(self.old_ids[v] for v in vertices)


@dataclass(frozen=True)
class Bipartition:
    """
    Two-coloring of a graph.

    `side[v]` is "left" or "right" when `valid`; it is empty otherwise.
    """

    side: tuple[Side, ...]
    valid: bool

    def part(self, which: Side) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == which]


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------
def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, numbers.Integral) or isinstance(v, bool) or not 0 <= v < n:
        log.error("[dclaw_py.graph.core] vertex %r out of range [0, %d)", v, n)
        raise VertexRangeError(f"vertex {v!r} out of range [0, {n})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Build a simple undirected graph.

    Parameters
    ----------
    n : int
        Vertex count (nonnegative).
    edges : Iterable[tuple[int, int]]
        Endpoint pairs with 0 <= u, v < n.

    Returns
    -------
    Graph

    Raises
    ------
    VertexRangeError
        If n is negative or an endpoint lies outside [0, n).
    SelfLoopError
        If some pair has u == v.
    DuplicateEdgeError
        If an undirected edge appears twice (in either orientation).
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {n}")

    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for u, v in edges:
        _check_vertex(u, n)
        _check_vertex(v, n)
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u].add(v)
        adj[v].add(u)
        count += 1

    return Graph(n=n, adjacency=tuple(tuple(sorted(a)) for a in adj), edge_count=count)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> RemappedGraph:
    """
    Induced subgraph on `keep`, relabeled 0..len(keep)-1 in ascending old-id order.
    """
    kept = sorted(set(keep))
    for v in kept:
        _check_vertex(v, g.n)
    new_id = {old: i for i, old in enumerate(kept)}
    edges = [
        (new_id[u], new_id[v])
        for u in kept
        for v in g.adjacency[u]
        if u < v and v in new_id
    ]
    return RemappedGraph(graph=from_edge_list(len(kept), edges), old_ids=tuple(kept))


def delete_vertices(g: Graph, s: Iterable[int]) -> RemappedGraph:
    """
    Return G - s together with the new-to-old id map.

    Raises
    ------
    VertexRangeError
        If some vertex of s lies outside [0, n).
    """
    removed = set()
    for v in s:
        _check_vertex(v, g.n)
        removed.add(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


# ----------------------------------------------------------------------
# Structure
# ----------------------------------------------------------------------
def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest vertex."""
    comps = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(comps, key=min)


def bipartition(g: Graph) -> Bipartition:
    """
    Two-color g if possible.

    In every component the lowest-id vertex is "left"; `valid` is False
    exactly when g has an odd cycle.
    """
    G = g.to_networkx()
    if not nx.is_bipartite(G):
        return Bipartition(side=(), valid=False)

    side: list[Side] = ["left"] * g.n
    for comp in connected_components(g):
        color = nx.bipartite.color(G.subgraph(comp))
        anchor = color[min(comp)]
        for v in comp:
            side[v] = "left" if color[v] == anchor else "right"
    return Bipartition(side=tuple(side), valid=True)


def diameter(g: Graph) -> int | float:
    """Longest shortest-path length; math.inf if disconnected, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    G = g.to_networkx()
    if not nx.is_connected(G):
        return math.inf
    return int(nx.diameter(G))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    verts = sorted(set(s))
    for v in verts:
        _check_vertex(v, g.n)
    nb = g.neighbor_sets
    return all(v in nb[u] for i, u in enumerate(verts) for v in verts[i + 1:])


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    verts = sorted(set(s))
    for v in verts:
        _check_vertex(v, g.n)
    nb = g.neighbor_sets
    return not any(v in nb[u] for i, u in enumerate(verts) for v in verts[i + 1:])


def complete_bipartite_sides(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """
    Return the sides (X, Y) if g is complete bipartite, else None.

    X is the side holding vertex 0. Edgeless or disconnected graphs give None.
    """
    if g.edge_count == 0 or len(connected_components(g)) != 1:
        return None
    bp = bipartition(g)
    if not bp.valid:
        return None
    x = frozenset(bp.part("left"))
    y = frozenset(bp.part("right"))
    if g.edge_count != len(x) * len(y):
        return None
    return x, y
