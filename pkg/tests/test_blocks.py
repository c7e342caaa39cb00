from __future__ import annotations

import networkx as nx
from hypothesis import given

from dclaw_py.graph.blocks import block_cut_tree
from dclaw_py.graph.core import Graph, connected_components, delete_vertices, from_edge_list
from graph_helpers import complete, cycle, graphs, path


def _is_articulation(g: Graph, v: int) -> bool:
    before = len(connected_components(g))
    after = len(connected_components(delete_vertices(g, [v]).graph))
    return after > before


def test_path_blocks_are_its_edges():
    tree = block_cut_tree(path(4))
    assert tree.blocks == (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}))
    assert tree.cut_vertices == {1, 2}
    assert tree.vertex_roles == ("endvertex", "cut", "cut", "endvertex")
    assert tree.tree_edges == ((0, 1), (1, 1), (1, 2), (2, 2))
    assert [tree.is_endblock(b) for b in range(3)] == [True, False, True]
    assert tree.endblock_count == (1, 1, 1, 1)


def test_isolated_vertices_are_singleton_blocks():
    tree = block_cut_tree(from_edge_list(3, [(1, 2)]))
    assert tree.blocks == (frozenset({0}), frozenset({1, 2}))
    assert tree.blocks_of(0) == (0,)
    assert not tree.cut_vertices


def test_two_triangles_sharing_a_vertex():
    g = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    tree = block_cut_tree(g)
    assert tree.blocks == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
    assert tree.cut_vertices == {2}
    assert tree.blocks_of(2) == (0, 1)
    assert tree.cuts_in(1) == (2,)
    assert tree.endblock_count[2] == 2


def test_rooted_orientation_and_postorder():
    # 0-1-2-3 path with a pendant triangle hanging off 2
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (4, 5)])
    tree = block_cut_tree(g)
    root = tree.blocks.index(frozenset({0, 1}))
    rooted = tree.rooted(root)
    assert rooted.parent_cut[root] is None
    mid = tree.blocks.index(frozenset({1, 2}))
    assert rooted.parent_cut[mid] == 1
    assert rooted.child_cuts[mid] == (2,)
    assert set(rooted.child_blocks[2]) == {tree.blocks.index(frozenset({2, 3})), tree.blocks.index(frozenset({2, 4, 5}))}
    order = rooted.postorder
    assert order[-1] == root
    for b, cut in rooted.parent_cut.items():
        if cut is None:
            continue
        parent = next(p for p, cuts in rooted.child_cuts.items() if cut in cuts)
        assert order.index(b) < order.index(parent)


def test_cycle_is_one_block():
    tree = block_cut_tree(cycle(6))
    assert tree.blocks == (frozenset(range(6)),)
    assert tree.is_endblock(0)


@given(graphs(max_n=8))
def test_cut_vertices_match_articulation_oracle(g):
    tree = block_cut_tree(g)
    assert tree.cut_vertices == {v for v in range(g.n) if _is_articulation(g, v)}


@given(graphs(max_n=8))
def test_blocks_cover_every_edge_exactly_once(g):
    tree = block_cut_tree(g)
    for u, v in g.edges():
        assert sum(1 for b in tree.blocks if u in b and v in b) == 1
    assert all(tree.blocks_of(v) for v in range(g.n))


def test_complete_graph_single_block():
    tree = block_cut_tree(complete(4))
    assert len(tree.blocks) == 1 and not tree.cut_vertices


@given(graphs(max_n=9))
def test_blocks_match_biconnected_components(g):
    tree = block_cut_tree(g)
    nxg = g.to_networkx()
    expected = {frozenset(c) for c in nx.biconnected_components(nxg)}
    expected |= {frozenset({v}) for v in nx.isolates(nxg)}
    assert set(tree.blocks) == expected
    assert len(tree.blocks) == len(expected)


@given(graphs(min_n=1, max_n=9))
def test_block_cut_incidence_is_a_forest(g):
    tree = block_cut_tree(g)
    incidence = nx.Graph()
    incidence.add_nodes_from(("block", b) for b in range(len(tree.blocks)))
    incidence.add_edges_from((("block", b), ("cut", v)) for b, v in tree.tree_edges)
    assert nx.is_forest(incidence)
    assert nx.number_connected_components(incidence) == len(connected_components(g))
