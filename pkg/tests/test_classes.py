from __future__ import annotations

from itertools import product

from hypothesis import given

from dclaw_py.graph.classes import (
    recognize_bipartite,
    recognize_block_graph,
    recognize_complete_bipartite,
    recognize_split,
    split_partition,
)
from dclaw_py.graph.core import Graph, from_edge_list, is_clique, is_independent
from graph_helpers import complete, complete_bipartite, cycle, graphs, path, star


def _split_by_enumeration(g: Graph) -> bool:
    for mask in product((False, True), repeat=g.n):
        clique = [v for v in range(g.n) if mask[v]]
        rest = [v for v in range(g.n) if not mask[v]]
        if is_clique(g, clique) and is_independent(g, rest):
            return True
    return False


def test_bipartite_recognition():
    rec = recognize_bipartite(cycle(4))
    assert rec.member and rec.witness == {"left": [0, 2], "right": [1, 3]}
    rec = recognize_bipartite(complete(3))
    assert not rec.member and rec.witness["reason"] == "odd_cycle"


def test_split_recognition():
    assert recognize_split(path(4)).member
    assert not recognize_split(cycle(4)).member
    rec = recognize_split(cycle(5))
    assert not rec.member and rec.witness["reason"] == "degree_sequence"
    assert recognize_split(star(4)).witness == {"clique": [0, 1], "independent": [2, 3, 4]}


@given(graphs(max_n=7))
def test_split_partition_matches_enumeration(g):
    part = split_partition(g)
    assert (part is not None) == _split_by_enumeration(g)
    if part is not None:
        clique, rest = part
        assert sorted(clique + rest) == list(range(g.n))


def test_block_graph_recognition():
    assert recognize_block_graph(path(5)).member
    two_triangles = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert recognize_block_graph(two_triangles).witness == {"blocks": 2}
    rec = recognize_block_graph(cycle(4))
    assert not rec.member
    assert rec.witness == {"block": 0, "vertices": [0, 1, 2, 3], "reason": "block_not_clique"}


def test_complete_bipartite_recognition():
    rec = recognize_complete_bipartite(complete_bipartite(2, 3))
    assert rec.member and rec.witness == {"x": [0, 1], "y": [2, 3, 4]}
    assert not recognize_complete_bipartite(path(4)).member
