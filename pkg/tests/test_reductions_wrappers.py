from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dclaw_py.common.errors import DegenerateInstanceError, NotBipartiteError, PreconditionError
from dclaw_py.graph.core import bipartition, diameter, from_edge_list
from dclaw_py.reductions.oracles import graph_vertex_cover
from dclaw_py.reductions.wrappers import (
    attach_leaves,
    attach_leaves_degree2,
    extend_claw_to_dclaw,
    wrap_diameter2,
    wrap_diameter3_bipartite,
)
from dclaw_py.solvers.exact import solve_brute_force, solve_min_fpt
from graph_helpers import complete, cycle, graphs, path, star


def _opt(g, d):
    return solve_min_fpt(g, d).size


# ----------------------------------------------------------------------
# attach_leaves
# ----------------------------------------------------------------------
def test_attach_leaves_on_triangle():
    art = attach_leaves(complete(3), 2)
    assert art.kind == "vc-leaves" and art.d == 2 and art.budget_k is None
    assert art.graph.n == 6
    assert art.vertex_labels[:3] == ("orig(0)", "orig(1)", "orig(2)")
    assert art.source_map["leaves"]["0"] == [art.vertex("pendant(0)#0")]
    assert _opt(art.graph, 2) == 2 == len(graph_vertex_cover(complete(3)))


def test_attach_leaves_single_edge_and_edgeless():
    assert _opt(attach_leaves(path(2), 3).graph, 3) == 1
    assert _opt(attach_leaves(from_edge_list(3, []), 3).graph, 3) == 0


def test_attach_leaves_budget_and_errors():
    assert attach_leaves(cycle(4), 3, k=2).budget_k == 2
    with pytest.raises(PreconditionError):
        attach_leaves(cycle(4), 1)
    with pytest.raises(DegenerateInstanceError):
        attach_leaves(path(2), 2, k=4)


@given(graphs(min_n=1, max_n=5), st.sampled_from([2, 3]))
def test_attach_leaves_preserves_vertex_cover(g, d):
    art = attach_leaves(g, d)
    assert art.graph.n == g.n * d
    assert _opt(art.graph, d) == len(graph_vertex_cover(g))


def test_attach_leaves_degree2():
    art = attach_leaves_degree2(cycle(4), 2)
    assert art.graph.n == 8
    assert _opt(art.graph, 2) == 2 == len(graph_vertex_cover(cycle(4)))
    # degree-3 vertices 0 and 5 only see degree-2 subdivision vertices
    theta = from_edge_list(8, [(0, 1), (1, 5), (0, 2), (2, 5), (0, 3), (3, 4), (4, 6), (6, 7), (7, 5)])
    art = attach_leaves_degree2(theta, 3)
    assert _opt(art.graph, 3) == len(graph_vertex_cover(theta))
    with pytest.raises(PreconditionError):
        attach_leaves_degree2(complete(4), 2)


# ----------------------------------------------------------------------
# claw extension
# ----------------------------------------------------------------------
def test_extend_claw_examples():
    art = extend_claw_to_dclaw(star(3), 4)
    assert art.kind == "claw-extend" and art.graph.n == 8
    assert art.metadata["bipartite"] is True and art.metadata["max_degree_bound"] == 4
    assert _opt(art.graph, 4) == 1
    assert _opt(extend_claw_to_dclaw(path(4), 5).graph, 5) == 0
    with pytest.raises(PreconditionError):
        extend_claw_to_dclaw(path(4), 3)


@given(graphs(max_n=5), st.sampled_from([4, 5]))
def test_extend_preserves_claw_optimum(g, d):
    assert _opt(extend_claw_to_dclaw(g, d).graph, d) == solve_brute_force(g, 3).size


# ----------------------------------------------------------------------
# diameter wrappers
# ----------------------------------------------------------------------
def test_diameter2_examples():
    art = wrap_diameter2(path(3), 2, k=1)
    assert art.budget_k == 2 and art.metadata["diameter"] == 2
    assert diameter(art.graph) == 2
    assert _opt(art.graph, 2) == 2
    assert _opt(wrap_diameter2(from_edge_list(3, []), 2).graph, 2) == 1


def test_diameter3_examples():
    art = wrap_diameter3_bipartite(path(3), 2)
    assert art.graph.n == 9
    assert _opt(art.graph, 2) == 3
    single = wrap_diameter3_bipartite(path(2), 2, k=1)
    assert single.budget_k == 3
    assert bipartition(single.graph).valid and diameter(single.graph) == 3
    with pytest.raises(NotBipartiteError):
        wrap_diameter3_bipartite(complete(3), 2)


@given(graphs(max_n=5), st.sampled_from([2, 3]))
def test_diameter_wrappers_shift_the_optimum(g, d):
    base = solve_brute_force(g, d).size
    two = wrap_diameter2(g, d)
    assert diameter(two.graph) == 2
    assert _opt(two.graph, d) == base + 1
    if bipartition(g).valid:
        three = wrap_diameter3_bipartite(g, d)
        assert bipartition(three.graph).valid and diameter(three.graph) == 3
        assert _opt(three.graph, d) == base + 2
