from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import given, reject
from hypothesis import strategies as st

from dclaw_py.claws.ops import verify_deletion_set
from dclaw_py.common.errors import DegenerateInstanceError, GraphInputError, NaeAssignmentError, PreconditionError
from dclaw_py.graph.core import bipartition, delete_vertices
from dclaw_py.reductions.base import NaeFormula
from dclaw_py.reductions.nae_claw import (
    build_claw_aux_Ajk,
    build_claw_aux_Hij,
    build_claw_aux_Hj,
    build_claw_clause_gadget,
    build_claw_variable_gadget,
    reduce_nae3sat_to_clawvd,
)
from dclaw_py.reductions.nae_cvd import build_cvd_clause_gadget, build_cvd_variable_gadget, lab, reduce_nae3sat_to_cvd
from dclaw_py.reductions.nae_solutions import formula_of, solution_from_nae_assignment
from dclaw_py.reductions.oracles import nae_oracle
from dclaw_py.reductions.wrappers import attach_leaves
from dclaw_py.solvers.exact import solve_fpt, solve_min_fpt
from graph_helpers import path

SINGLE = NaeFormula.of(3, [(1, 2, 3)])
NAE_PATTERNS = [p for p in product((True, False), repeat=3) if len(set(p)) == 2]


def _valid_pairs(g, d):
    return [p for p in combinations(range(g.n), 2) if verify_deletion_set(g, p, d)[0]]


def test_formula_validation():
    assert SINGLE.m == 1
    assert SINGLE.is_nae((True, False, False))
    assert not SINGLE.is_nae((True, True, True))
    with pytest.raises(GraphInputError):
        NaeFormula.of(3, [(1, 1, 2)])
    with pytest.raises(GraphInputError):
        NaeFormula.of(3, [(1, 2, 4)])


# ----------------------------------------------------------------------
# cluster vertex deletion
# ----------------------------------------------------------------------
@pytest.mark.parametrize("m", [1, 2, 3])
def test_cvd_variable_gadget_is_a_cycle(m):
    g = build_cvd_variable_gadget(m).graph
    assert g.n == 6 * m and g.edge_count == 6 * m
    assert all(g.degree(v) == 2 for v in range(g.n))
    assert solve_min_fpt(g, 2).size == 2 * m


def test_cvd_variable_gadget_rejects_m0():
    with pytest.raises(ValueError):
        build_cvd_variable_gadget(0)


def test_cvd_clause_gadget_shape():
    lg = build_cvd_clause_gadget()
    assert lg.graph.n == 30 and lg.graph.max_degree() == 3
    assert bipartition(lg.graph).valid


@pytest.mark.slow
def test_cvd_clause_gadget_optimum():
    g = build_cvd_clause_gadget().graph
    assert solve_min_fpt(g, 2).size == 11
    assert solve_fpt(g, 2, 10) is None


@pytest.mark.slow
@pytest.mark.parametrize("name", ["c", "c'"])
def test_no_cvd_clause_optimum_takes_a_whole_trio(name):
    lg = build_cvd_clause_gadget()
    trio = [lg.vertex(lab(name, 1, k)) for k in (1, 2, 3)]
    rest = delete_vertices(lg.graph, trio).graph
    assert 3 + solve_min_fpt(rest, 2).size > 11
    assert solve_fpt(rest, 2, 8) is None


def test_cvd_reduction_single_clause():
    art = reduce_nae3sat_to_cvd(SINGLE)
    assert art.kind == "nae-cvd" and art.d == 2
    assert art.graph.n == 48 and art.budget_k == 17
    assert art.graph.max_degree() <= 3 and bipartition(art.graph).valid
    assert art.source_map["c"]["1"] == [art.vertex(lab("c", 1, k)) for k in (1, 2, 3)]
    chosen = solution_from_nae_assignment(art, (True, False, False))
    assert len(chosen) == 17
    assert verify_deletion_set(art.graph, chosen, 2)[0]


def test_nae_reductions_reject_empty_formula():
    empty = NaeFormula.of(3, [])
    with pytest.raises(DegenerateInstanceError):
        reduce_nae3sat_to_cvd(empty)
    with pytest.raises(DegenerateInstanceError):
        reduce_nae3sat_to_clawvd(empty)


@pytest.mark.parametrize("pattern", NAE_PATTERNS)
def test_every_clause_pattern_meets_both_budgets(pattern):
    for reduce in (reduce_nae3sat_to_cvd, reduce_nae3sat_to_clawvd):
        art = reduce(SINGLE)
        chosen = solution_from_nae_assignment(art, pattern)
        assert len(chosen) == art.budget_k
        assert verify_deletion_set(art.graph, chosen, art.d)[0]


def test_solution_rejects_bad_assignments():
    art = reduce_nae3sat_to_cvd(SINGLE)
    with pytest.raises(NaeAssignmentError):
        solution_from_nae_assignment(art, (True, True, True))
    with pytest.raises(NaeAssignmentError):
        solution_from_nae_assignment(art, (True, False))
    with pytest.raises(PreconditionError):
        solution_from_nae_assignment(attach_leaves(path(2), 2), (True, False, False))


# ----------------------------------------------------------------------
# claw vertex deletion
# ----------------------------------------------------------------------
def test_hij_optimum_containing_v_is_unique():
    lg = build_claw_aux_Hij()
    assert lg.graph.n == 8
    assert solve_min_fpt(lg.graph, 3).size == 2
    v = lg.vertex(lab("v", 1, 1))
    with_v = [p for p in _valid_pairs(lg.graph, 3) if v in p]
    assert with_v == [tuple(sorted((v, lg.vertex(lab("b2", 1, 1)))))]


def test_ajk_has_a_unique_optimum():
    lg = build_claw_aux_Ajk()
    assert lg.graph.n == 11
    assert solve_min_fpt(lg.graph, 3).size == 2
    assert _valid_pairs(lg.graph, 3) == [tuple(sorted((lg.vertex(lab("x", 1, 1)), lg.vertex(lab("z", 1, 1)))))]


def test_primed_ajk_labels():
    lg = build_claw_aux_Ajk(2, 3, primed=True)
    assert lab("c'", 2, 3) in lg.labels and lab("d'", 2, 3) in lg.labels


@pytest.mark.parametrize("m", [1, 2])
def test_claw_variable_gadget_optimum(m):
    g = build_claw_variable_gadget(m).graph
    assert g.n == 8 * m
    assert solve_min_fpt(g, 3).size == 2 * m


def test_claw_clause_gadget_shape():
    g = build_claw_clause_gadget().graph
    assert g.n == 66 and g.max_degree() <= 3
    assert bipartition(g).valid


@pytest.mark.slow
def test_hj_optimum_and_extensions():
    lg = build_claw_aux_Hj()
    g = lg.graph
    assert g.n == 33
    assert solve_min_fpt(g, 3).size == 8
    cs = [lg.vertex(lab("c", 1, k)) for k in (1, 2, 3)]
    for size in (1, 2, 3):
        for t in combinations(cs, size):
            found = solve_fpt(delete_vertices(g, t).graph, 3, 8 - size)
            assert (found is not None) == (size < 3)


@pytest.mark.slow
def test_hj_optima_avoid_clause_neighbors():
    lg = build_claw_aux_Hj()
    g = lg.graph
    cs = [lg.vertex(lab("c", 1, k)) for k in (1, 2, 3)]
    neighbors = sorted({u for c in cs for u in g.neighbors(c)})
    assert len(neighbors) == 6
    for u in neighbors:
        assert 1 + solve_min_fpt(delete_vertices(g, [u]).graph, 3).size > 8


@pytest.mark.slow
def test_claw_clause_gadget_optimum():
    assert solve_min_fpt(build_claw_clause_gadget().graph, 3).size == 16


def test_claw_reduction_single_clause():
    art = reduce_nae3sat_to_clawvd(SINGLE)
    assert art.kind == "nae-claw" and art.d == 3
    assert art.graph.n == 3 * 8 + 2 * 33 and art.budget_k == 22
    assert art.graph.max_degree() <= 3 and bipartition(art.graph).valid
    chosen = solution_from_nae_assignment(art, (True, True, False))
    assert len(chosen) == 22
    assert verify_deletion_set(art.graph, chosen, 3)[0]


@st.composite
def _satisfiable_formulas(draw):
    n = draw(st.integers(3, 5))
    clauses = draw(st.lists(st.lists(st.integers(1, n), min_size=3, max_size=3, unique=True), min_size=1, max_size=3))
    f = NaeFormula.of(n, clauses)
    assignment = nae_oracle(f)
    if assignment is None:
        reject()
    return f, assignment


@given(_satisfiable_formulas())
def test_budget_identities(case):
    f, assignment = case
    for reduce, per_clause in ((reduce_nae3sat_to_cvd, 11), (reduce_nae3sat_to_clawvd, 16)):
        art = reduce(f)
        assert formula_of(art) == f
        assert bipartition(art.graph).valid and art.graph.max_degree() <= 3
        chosen = solution_from_nae_assignment(art, assignment)
        assert len(chosen) == art.budget_k == 2 * f.m * f.n + per_clause * f.m
        assert verify_deletion_set(art.graph, chosen, art.d)[0]
