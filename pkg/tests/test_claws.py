from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dclaw_py.claws.ops import (
    DClaw,
    Solution,
    enumerate_d_claws,
    find_d_claw,
    is_d_claw_free,
    verify_deletion_set,
)
from dclaw_py.common.errors import VertexRangeError
from dclaw_py.graph.core import Graph, from_edge_list
from graph_helpers import complete, cycle, graphs, path, star


def _claws_by_definition(g: Graph, d: int) -> set[tuple[int, tuple[int, ...]]]:
    found = set()
    for c in range(g.n):
        for leaves in combinations(g.adjacency[c], d):
            if all(not g.has_edge(a, b) for a, b in combinations(leaves, 2)):
                found.add((c, leaves))
    return found


def test_star_is_its_own_claw():
    claw = find_d_claw(star(3), 3)
    assert claw == DClaw(0, (1, 2, 3))
    assert claw.d == 3 and claw.vertices == (0, 1, 2, 3)
    assert claw.to_dict() == {"center": 0, "leaves": [1, 2, 3]}
    assert find_d_claw(star(3), 4) is None


def test_first_claw_is_lowest_center_least_leaves():
    assert find_d_claw(path(3), 2) == DClaw(1, (0, 2))
    assert find_d_claw(cycle(5), 2) == DClaw(0, (1, 4))


def test_complete_graphs_are_2claw_free():
    assert is_d_claw_free(complete(5), 2)
    assert not is_d_claw_free(complete(5), 1)


def test_d1_claws_are_edges_per_endpoint():
    claws = enumerate_d_claws(path(3), 1)
    assert claws == [DClaw(0, (1,)), DClaw(1, (0,)), DClaw(1, (2,)), DClaw(2, (1,))]


def test_enumeration_limit():
    assert len(enumerate_d_claws(star(5), 3)) == 10
    assert len(enumerate_d_claws(star(5), 3, limit=4)) == 4


def test_invalid_d():
    with pytest.raises(ValueError):
        find_d_claw(star(3), 0)


def test_verify_deletion_set():
    g = star(3)
    assert verify_deletion_set(g, [0], 3) == (True, None)
    ok, witness = verify_deletion_set(g, [], 3)
    assert not ok and witness == DClaw(0, (1, 2, 3))
    assert verify_deletion_set(g, [1], 3) == (True, None)
    with pytest.raises(VertexRangeError):
        verify_deletion_set(g, [4], 3)


def test_verify_reports_witness_in_original_ids():
    # two 3-claws sharing leaf 1: centers 0 and 4
    g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 5), (4, 6)])
    ok, witness = verify_deletion_set(g, [0], 3)
    assert not ok and witness == DClaw(4, (1, 5, 6))
    assert verify_deletion_set(g, [1], 3) == (True, None)


def test_solution_of_sorts_and_dedups():
    sol = Solution.of([3, 1, 3], 2, certified=True, tag="brute", note="x")
    assert sol.vertices == (1, 3) and sol.size == 2
    assert sol.details == {"note": "x"}


@given(graphs(max_n=7), st.integers(1, 4))
def test_enumeration_matches_definition(g, d):
    listed = enumerate_d_claws(g, d)
    assert {(c.center, c.leaves) for c in listed} == _claws_by_definition(g, d)
    assert listed == sorted(listed)
    assert is_d_claw_free(g, d) == (not listed)


@given(graphs(max_n=7), st.integers(1, 3), st.data())
def test_verify_agrees_with_enumeration_after_deletion(g, d, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    ok, witness = verify_deletion_set(g, s, d)
    remaining = [c for c in enumerate_d_claws(g, d) if not set(c.vertices) & s]
    assert ok == (not remaining)
    if witness is not None:
        assert witness == remaining[0]
