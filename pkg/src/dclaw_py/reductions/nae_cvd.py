"""
dclaw_py.reductions.nae_cvd
===========================
Monotone NAE-3SAT -> cluster vertex deletion (d = 2) on bipartite graphs
of maximum degree 3.

Variable gadget G(v_i), m clause slots
--------------------------------------
A 6m-cycle. Slot j contributes the consecutive vertices

    v_{i,j}  v'_{i,j}  w_{i,j}  x_{i,j}  y_{i,j}  z_{i,j}

and z_{i,j} is adjacent to v_{i,j+1} (wrapping to v_{i,1}).
Optimal deletion sets have size 2m; the "true" menu is {v, x} per slot and
the "false" menu is {v', y} per slot.

Clause gadget G(C_j), 30 vertices
---------------------------------
For each position k in 1..3 (k+1 taken cyclically) the adjacency table is

    8-cycle   c_{j,k} - r2_{j,k} - r1_{j,k} - h_{j,k} - h'_{j,k}
              - r1'_{j,k} - r2'_{j,k} - c'_{j,k} - c_{j,k}
    connector h'_{j,k} - p_{j,k} - p'_{j,k} - h_{j,k+1}

so h, h', p, p' over k = 1..3 form a 12-cycle, and each
r2 - r1 - ... path together with its clause pair forms the 6-vertex
stretch c', r2', r1' / r1, r2, c around that cycle. The optimum is 11.

Wiring
------
If variable i is the k-th variable of clause j, then c_{j,k} - v_{i,j} and
c'_{j,k} - v'_{i,j}. Budget 2mn + 11m.
"""

from __future__ import annotations

from ..common.errors import DegenerateInstanceError
from ..common.logging import get_logger
from ..graph.core import bipartition
from .base import GadgetBuilder, LabeledGraph, NaeFormula, ReductionArtifact

log = get_logger(__name__)

SLOT = ("v", "v'", "w", "x", "y", "z")

# clause menus over relative positions 1..3 (see clause_menu)
ONE_TRUE_MENU = (
    ("c'", 1), ("c", 2), ("c", 3),
    ("r1", 1), ("h'", 1), ("h", 2), ("r1'", 2), ("p'", 2),
    ("r1", 3), ("r1'", 3), ("p", 3),
)
TWO_TRUE_MENU = (
    ("c'", 1), ("c'", 2), ("c", 3),
    ("r1", 1), ("r1'", 1), ("p", 1), ("r1", 2), ("h'", 2),
    ("h", 3), ("r1'", 3), ("p'", 3),
)


def lab(name: str, a: int, b: int) -> str:
    return f"{name}_{{{a},{b}}}"


def _rot(k: int, by: int) -> int:
    return (k - 1 + by) % 3 + 1


def build_cvd_variable_gadget(m: int, i: int = 1) -> LabeledGraph:
    """
    The 6m-cycle gadget of variable i.

    Raises
    ------
    ValueError
        If m < 1.
    """
    if m < 1:
        raise ValueError(f"variable gadget needs m >= 1, got {m}")
    b = GadgetBuilder()
    _add_variable(b, m, i)
    return b.build()


def _add_variable(b: GadgetBuilder, m: int, i: int) -> None:
    ring = [lab(name, i, j) for j in range(1, m + 1) for name in SLOT]
    for label in ring:
        b.add(label)
    b.cycle(*ring)


def build_cvd_clause_gadget(j: int = 1) -> LabeledGraph:
    """The 30-vertex clause gadget of clause j."""
    b = GadgetBuilder()
    _add_clause(b, j)
    return b.build()


def _add_clause(b: GadgetBuilder, j: int) -> None:
    for k in (1, 2, 3):
        b.cycle(*(lab(name, j, k) for name in ("c", "r2", "r1", "h", "h'", "r1'", "r2'", "c'")))
    for k in (1, 2, 3):
        b.path(lab("h'", j, k), lab("p", j, k), lab("p'", j, k), lab("h", j, _rot(k, 1)))


def variable_menu(m: int, i: int, value: bool) -> list[str]:
    names = ("v", "x") if value else ("v'", "y")
    return [lab(name, i, j) for j in range(1, m + 1) for name in names]


def clause_menu(j: int, values: tuple[bool, bool, bool]) -> list[str]:
    """
    The 11 clause-gadget vertices deleted for a nae pattern of clause j.

    With one true position t the one-true menu is rotated so that its
    relative position 1 lands on t; with one false position f the two-true
    menu is rotated so that its relative position 3 lands on f.
    """
    trues = [k for k in (1, 2, 3) if values[k - 1]]
    if len(trues) == 1:
        menu, by = ONE_TRUE_MENU, trues[0] - 1
    elif len(trues) == 2:
        false_pos = next(k for k in (1, 2, 3) if not values[k - 1])
        menu, by = TWO_TRUE_MENU, false_pos - 3
    else:
        raise ValueError(f"clause pattern {values} is not nae")
    return [lab(name, j, _rot(rel, by)) for name, rel in menu]


def reduce_nae3sat_to_cvd(f: NaeFormula) -> ReductionArtifact:
    """
    Build the cluster-deletion instance of a monotone NAE-3SAT formula.

    Returns
    -------
    ReductionArtifact
        d = 2, budget 2mn + 11m; bipartite with maximum degree 3.

    Raises
    ------
    DegenerateInstanceError
        If the formula has no clauses.
    """
    if f.m == 0:
        log.error("[dclaw_py.reductions.nae_cvd] formula without clauses")
        raise DegenerateInstanceError("formula has no clauses")

    b = GadgetBuilder()
    for i in range(1, f.n + 1):
        _add_variable(b, f.m, i)
    for j in range(1, f.m + 1):
        _add_clause(b, j)
    for j, clause in enumerate(f.clauses, start=1):
        for k, i in enumerate(clause, start=1):
            b.edge(lab("c", j, k), lab("v", i, j))
            b.edge(lab("c'", j, k), lab("v'", i, j))
    lg = b.build()

    assert bipartition(lg.graph).valid, "construction is not bipartite"
    assert lg.graph.max_degree() <= 3, "construction exceeds degree 3"

    budget = 2 * f.m * f.n + 11 * f.m
    return ReductionArtifact(
        kind="nae-cvd",
        graph=lg.graph,
        d=2,
        budget_k=budget,
        vertex_labels=lg.labels,
        source_map={
            "n": f.n,
            "clauses": [list(c) for c in f.clauses],
            "v": {str(i): [lg.vertex(lab("v", i, j)) for j in range(1, f.m + 1)] for i in range(1, f.n + 1)},
            "v'": {str(i): [lg.vertex(lab("v'", i, j)) for j in range(1, f.m + 1)] for i in range(1, f.n + 1)},
            "c": {str(j): [lg.vertex(lab("c", j, k)) for k in (1, 2, 3)] for j in range(1, f.m + 1)},
            "c'": {str(j): [lg.vertex(lab("c'", j, k)) for k in (1, 2, 3)] for j in range(1, f.m + 1)},
        },
        metadata={"bipartite": True, "max_degree": lg.graph.max_degree(), "budget": "2mn+11m"},
    )
