from __future__ import annotations

import pytest
from hypothesis import given, reject, settings
from hypothesis import strategies as st

from dclaw_py.claws.ops import find_d_claw, verify_deletion_set
from dclaw_py.common.errors import DisjointEdgeError, PreconditionError, UniformityError
from dclaw_py.graph.classes import recognize_split
from dclaw_py.reductions.base import Hypergraph
from dclaw_py.reductions.oracles import hvc_oracle
from dclaw_py.reductions.split import reduce_hvc_to_split, solution_maps_split
from dclaw_py.reductions.wrappers import attach_leaves
from dclaw_py.solvers.exact import solve_min_fpt
from graph_helpers import path

TWO_EDGES = Hypergraph.of(4, 2, [(0, 1), (2, 3)])


def test_two_disjoint_edges():
    art = reduce_hvc_to_split(TWO_EDGES, k=2)
    assert art.kind == "hvc-split" and art.d == 3 and art.budget_k == 2
    assert art.graph.n == 4 * 2 + 4
    assert art.source_map["I"] == [0, 1, 2, 3]
    assert art.vertex_labels[:4] == ("I(0)", "I(1)", "I(2)", "I(3)")
    assert len(art.source_map["Q"]["1"]) == 4


def test_output_is_split_without_larger_claws():
    art = reduce_hvc_to_split(TWO_EDGES)
    rec = recognize_split(art.graph)
    assert rec.member
    assert rec.witness["independent"] == art.source_map["I"]
    assert find_d_claw(art.graph, 4) is None
    assert find_d_claw(art.graph, 3) is not None


def test_optimum_equals_vertex_cover():
    art = reduce_hvc_to_split(TWO_EDGES)
    sol = solve_min_fpt(art.graph, 3)
    assert sol.size == len(hvc_oracle(TWO_EDGES)) == 2


def test_forward_and_backward_maps():
    art = reduce_hvc_to_split(TWO_EDGES)
    forward = solution_maps_split(art, "vc_to_claw")
    backward = solution_maps_split(art, "claw_to_vc")
    deletion = forward([0, 2])
    assert deletion == [0, 2]
    assert verify_deletion_set(art.graph, deletion, 3)[0]
    # Q vertices in a deletion set map to nothing
    q = art.source_map["Q"]["0"][0]
    assert backward([1, 3, q]) == [1, 3]
    with pytest.raises(PreconditionError):
        backward([0, 1, 2, 3])


def test_map_preconditions():
    art = reduce_hvc_to_split(TWO_EDGES)
    with pytest.raises(PreconditionError):
        solution_maps_split(art, "sideways")  # type: ignore[arg-type]
    with pytest.raises(PreconditionError):
        solution_maps_split(attach_leaves(path(2), 2), "vc_to_claw")


def test_edges_need_disjoint_partners():
    with pytest.raises(DisjointEdgeError):
        reduce_hvc_to_split(Hypergraph.of(3, 2, [(0, 1), (1, 2)]))
    with pytest.raises(DisjointEdgeError):
        reduce_hvc_to_split(Hypergraph.of(2, 2, [(0, 1)]))


def test_d_must_match_uniformity():
    with pytest.raises(UniformityError):
        reduce_hvc_to_split(TWO_EDGES, d=4)
    assert reduce_hvc_to_split(TWO_EDGES, d=3).d == 3


def test_hypergraph_validation():
    with pytest.raises(UniformityError):
        Hypergraph.of(4, 2, [(0, 1, 2)])
    with pytest.raises(UniformityError):
        Hypergraph.of(4, 1, [(0,)])


@st.composite
def _partnered_hypergraphs(draw):
    n = draw(st.integers(4, 6))
    r = draw(st.sampled_from([2, 3])) if n >= 6 else 2
    pool = st.lists(st.integers(0, n - 1), min_size=r, max_size=r, unique=True)
    edges = draw(st.lists(pool, min_size=2, max_size=3))
    sets = [frozenset(e) for e in edges]
    if not all(any(e.isdisjoint(f) for f in sets) for e in sets):
        reject()
    return Hypergraph.of(n, r, edges)


@settings(max_examples=25)
@given(_partnered_hypergraphs())
def test_reduction_preserves_the_optimum(h):
    art = reduce_hvc_to_split(h)
    assert art.graph.n == h.n * h.m + h.n
    sol = solve_min_fpt(art.graph, art.d)
    cover = hvc_oracle(h)
    assert sol.size == len(cover)
    assert verify_deletion_set(art.graph, solution_maps_split(art, "vc_to_claw")(cover), art.d)[0]
    if sol.size < h.n:
        back = solution_maps_split(art, "claw_to_vc")(sol.vertices)
        assert all(set(e) & set(back) for e in h.edges)
