"""
dclaw_py.reductions.nae_claw
============================
Monotone NAE-3SAT -> claw vertex deletion (d = 3) on bipartite graphs of
maximum degree 3.

Adjacency tables
----------------
H_{i,j} (8 vertices)::

    v - a1 - a2 - a3 - b3 - b2 - b1 - a1,   a2 - b2,   b1 - v' - b3

Optimum 2; the only optimum containing v is {v, b2}; {v', a2} is the
"false" menu.

A_{j,k} (11 vertices)::

    c - p1 - x - y - z - q1 - d - q3 - z,   c - p3 - x,
    p1 - p2 - p3,   q1 - q2 - q3

It carries two K_{2,3}'s ({p1, p3} against {c, x, p2} and {q1, q3}
against {z, d, q2}); {x, z} is its unique optimum.

H_j: A_{j,1}, A_{j,2}, A_{j,3} plus d_{j,1} - y_{j,2}, d_{j,2} - y_{j,3},
d_{j,3} - y_{j,1}. Optimum 8. The clause gadget is H_j plus a disjoint
primed copy H'_j (names carry a prime, e.g. x'_{j,k}); optimum 16.

Wiring
------
Variable i owns H_{i,1} .. H_{i,m} chained by a3_{i,j} - v_{i,j+1}
(a3_{i,m} - v_{i,1}). If variable i is the k-th variable of clause j,
c_{j,k} - v_{i,j} and c'_{j,k} - v'_{i,j}. Budget 2mn + 16m.
"""

from __future__ import annotations

from ..common.errors import DegenerateInstanceError
from ..common.logging import get_logger
from ..graph.core import bipartition
from .base import GadgetBuilder, LabeledGraph, NaeFormula, ReductionArtifact
from .nae_cvd import lab

log = get_logger(__name__)

H_EDGES = (
    ("v", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "b3"), ("b3", "b2"),
    ("b2", "b1"), ("b1", "a1"), ("a2", "b2"), ("b1", "v'"), ("v'", "b3"),
)
H_VERTICES = ("v", "v'", "a1", "a2", "a3", "b1", "b2", "b3")

A_EDGES = (
    ("c", "p1"), ("p1", "x"), ("x", "y"), ("y", "z"), ("z", "q1"), ("q1", "d"),
    ("d", "q3"), ("q3", "z"), ("c", "p3"), ("p3", "x"), ("p1", "p2"), ("p2", "p3"),
    ("q1", "q2"), ("q2", "q3"),
)
A_VERTICES = ("c", "p1", "p2", "p3", "x", "y", "z", "q1", "q2", "q3", "d")

# per-clause menus over relative positions; first tuple for H_j, second for H'_j
ONE_TRUE_MENU = (
    (("x", 1), ("z", 1), ("c", 2), ("y", 2), ("d", 2), ("c", 3), ("y", 3), ("d", 3)),
    (("c", 1), ("y", 1), ("d", 1), ("x", 2), ("z", 2), ("x", 3), ("y", 3), ("d", 3)),
)
TWO_TRUE_MENU = (
    (("x", 1), ("z", 1), ("x", 2), ("y", 2), ("d", 2), ("c", 3), ("y", 3), ("d", 3)),
    (("c", 1), ("y", 1), ("d", 1), ("c", 2), ("y", 2), ("d", 2), ("x", 3), ("z", 3)),
)


def _rot(k: int, by: int) -> int:
    return (k - 1 + by) % 3 + 1


def _primed(name: str, primed: bool) -> str:
    return f"{name}'" if primed else name


# ----------------------------------------------------------------------
# Auxiliary graphs
# ----------------------------------------------------------------------
def _add_hij(b: GadgetBuilder, i: int, j: int) -> None:
    for name in H_VERTICES:
        b.add(lab(name, i, j))
    for u, w in H_EDGES:
        b.edge(lab(u, i, j), lab(w, i, j))


def build_claw_aux_Hij(i: int = 1, j: int = 1) -> LabeledGraph:
    b = GadgetBuilder()
    _add_hij(b, i, j)
    return b.build()


def _add_ajk(b: GadgetBuilder, j: int, k: int, primed: bool) -> None:
    for name in A_VERTICES:
        b.add(lab(_primed(name, primed), j, k))
    for u, w in A_EDGES:
        b.edge(lab(_primed(u, primed), j, k), lab(_primed(w, primed), j, k))


def build_claw_aux_Ajk(j: int = 1, k: int = 1, primed: bool = False) -> LabeledGraph:
    b = GadgetBuilder()
    _add_ajk(b, j, k, primed)
    return b.build()


def _add_hj(b: GadgetBuilder, j: int, primed: bool) -> None:
    for k in (1, 2, 3):
        _add_ajk(b, j, k, primed)
    dn, yn = _primed("d", primed), _primed("y", primed)
    for k in (1, 2, 3):
        b.edge(lab(dn, j, k), lab(yn, j, _rot(k, 1)))


def build_claw_aux_Hj(j: int = 1, primed: bool = False) -> LabeledGraph:
    b = GadgetBuilder()
    _add_hj(b, j, primed)
    return b.build()


# ----------------------------------------------------------------------
# Gadgets
# ----------------------------------------------------------------------
def _add_variable(b: GadgetBuilder, m: int, i: int) -> None:
    for j in range(1, m + 1):
        _add_hij(b, i, j)
    for j in range(1, m + 1):
        b.edge(lab("a3", i, j), lab("v", i, j % m + 1))


def build_claw_variable_gadget(m: int, i: int = 1) -> LabeledGraph:
    """m chained copies of H_{i,j}."""
    if m < 1:
        raise ValueError(f"variable gadget needs m >= 1, got {m}")
    b = GadgetBuilder()
    _add_variable(b, m, i)
    return b.build()


def build_claw_clause_gadget(j: int = 1) -> LabeledGraph:
    """H_j plus its primed copy H'_j (66 vertices)."""
    b = GadgetBuilder()
    _add_hj(b, j, primed=False)
    _add_hj(b, j, primed=True)
    return b.build()


def variable_menu(m: int, i: int, value: bool) -> list[str]:
    names = ("v", "b2") if value else ("v'", "a2")
    return [lab(name, i, j) for j in range(1, m + 1) for name in names]


def clause_menu(j: int, values: tuple[bool, bool, bool]) -> list[str]:
    """The 16 clause-gadget vertices deleted for a nae pattern of clause j."""
    trues = [k for k in (1, 2, 3) if values[k - 1]]
    if len(trues) == 1:
        menu, by = ONE_TRUE_MENU, trues[0] - 1
    elif len(trues) == 2:
        false_pos = next(k for k in (1, 2, 3) if not values[k - 1])
        menu, by = TWO_TRUE_MENU, false_pos - 3
    else:
        raise ValueError(f"clause pattern {values} is not nae")
    plain, primed = menu
    return [lab(name, j, _rot(rel, by)) for name, rel in plain] + [
        lab(_primed(name, True), j, _rot(rel, by)) for name, rel in primed
    ]


def reduce_nae3sat_to_clawvd(f: NaeFormula) -> ReductionArtifact:
    """
    Build the claw-deletion instance of a monotone NAE-3SAT formula.

    Returns
    -------
    ReductionArtifact
        d = 3, budget 2mn + 16m; bipartite with maximum degree 3.

    Raises
    ------
    DegenerateInstanceError
        If the formula has no clauses.
    """
    if f.m == 0:
        log.error("[dclaw_py.reductions.nae_claw] formula without clauses")
        raise DegenerateInstanceError("formula has no clauses")

    b = GadgetBuilder()
    for i in range(1, f.n + 1):
        _add_variable(b, f.m, i)
    for j in range(1, f.m + 1):
        _add_hj(b, j, primed=False)
        _add_hj(b, j, primed=True)
    for j, clause in enumerate(f.clauses, start=1):
        for k, i in enumerate(clause, start=1):
            b.edge(lab("c", j, k), lab("v", i, j))
            b.edge(lab("c'", j, k), lab("v'", i, j))
    lg = b.build()

    assert bipartition(lg.graph).valid, "construction is not bipartite"
    assert lg.graph.max_degree() <= 3, "construction exceeds degree 3"

    budget = 2 * f.m * f.n + 16 * f.m
    return ReductionArtifact(
        kind="nae-claw",
        graph=lg.graph,
        d=3,
        budget_k=budget,
        vertex_labels=lg.labels,
        source_map={
            "n": f.n,
            "clauses": [list(c) for c in f.clauses],
            "v": {str(i): [lg.vertex(lab("v", i, j)) for j in range(1, f.m + 1)] for i in range(1, f.n + 1)},
            "v'": {str(i): [lg.vertex(lab("v'", i, j)) for j in range(1, f.m + 1)] for i in range(1, f.n + 1)},
            "b2": {str(i): [lg.vertex(lab("b2", i, j)) for j in range(1, f.m + 1)] for i in range(1, f.n + 1)},
            "c": {str(j): [lg.vertex(lab("c", j, k)) for k in (1, 2, 3)] for j in range(1, f.m + 1)},
            "c'": {str(j): [lg.vertex(lab("c'", j, k)) for k in (1, 2, 3)] for j in range(1, f.m + 1)},
        },
        metadata={"bipartite": True, "max_degree": lg.graph.max_degree(), "budget": "2mn+16m"},
    )
