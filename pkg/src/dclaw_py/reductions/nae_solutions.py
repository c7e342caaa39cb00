"""
dclaw_py.reductions.nae_solutions
=================================
Forward certificates for the two NAE-3SAT reductions: turn a nae
assignment into the deletion set of size exactly budget_k.
"""

from __future__ import annotations

from typing import Sequence

from ..claws.ops import verify_deletion_set
from ..common.errors import NaeAssignmentError, PreconditionError
from ..common.logging import get_logger
from . import nae_claw, nae_cvd
from .base import NaeFormula, ReductionArtifact

log = get_logger(__name__)

_MENUS = {
    "nae-cvd": (nae_cvd.variable_menu, nae_cvd.clause_menu),
    "nae-claw": (nae_claw.variable_menu, nae_claw.clause_menu),
}


def formula_of(artifact: ReductionArtifact) -> NaeFormula:
    return NaeFormula.of(artifact.source_map["n"], artifact.source_map["clauses"])


def solution_from_nae_assignment(artifact: ReductionArtifact, assignment: Sequence[bool]) -> list[int]:
    """
    Deletion set built from a nae assignment.

    Every variable contributes its true or false menu in each clause slot,
    and every clause contributes the menu of its truth pattern.

    Parameters
    ----------
    artifact : ReductionArtifact
        Output of `reduce_nae3sat_to_cvd` or `reduce_nae3sat_to_clawvd`.
    assignment : Sequence[bool]
        Truth value per variable, variable 1 first.

    Returns
    -------
    list[int]
        Sorted vertex ids; exactly budget_k of them, verified claw-free.

    Raises
    ------
    PreconditionError
        If the artifact is not a NAE reduction.
    NaeAssignmentError
        If some clause is all-true or all-false under the assignment.
    """
    if artifact.kind not in _MENUS:
        raise PreconditionError(f"artifact kind {artifact.kind!r} is not a NAE reduction")
    f = formula_of(artifact)
    values = tuple(bool(x) for x in assignment)
    if len(values) != f.n:
        raise NaeAssignmentError(f"assignment has {len(values)} values for {f.n} variables")
    if not f.is_nae(values):
        log.error("[dclaw_py.reductions.nae_solutions] assignment %s is not nae", values)
        raise NaeAssignmentError("assignment leaves a clause all-true or all-false")

    variable_menu, clause_menu = _MENUS[artifact.kind]
    labels: list[str] = []
    for i in range(1, f.n + 1):
        labels.extend(variable_menu(f.m, i, values[i - 1]))
    for j, clause in enumerate(f.clauses, start=1):
        labels.extend(clause_menu(j, tuple(values[x - 1] for x in clause)))

    chosen = artifact.vertices(labels)
    ok, witness = verify_deletion_set(artifact.graph, chosen, artifact.d)
    if not ok or len(set(chosen)) != artifact.budget_k:
        raise AssertionError(f"menu set of size {len(set(chosen))} invalid (witness {witness})")
    return chosen
