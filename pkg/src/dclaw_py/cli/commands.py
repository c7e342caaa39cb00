"""
dclaw_py.cli.commands
=====================
Command handlers behind the `dclaw` subcommands.

Each handler takes plain arguments, does its work through the library API
and returns a `Report`. Handlers raise library errors unchanged; `main`
turns them into exit codes. Decision-mode "no" is not an error: it comes
back as a normal report with exit code 4, and "unknown" with exit code 5.

Public API
----------
- cmd_solve
- cmd_verify
- cmd_recognize
- cmd_reduce
- cmd_gen
- cmd_suite
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping

import yaml

from ..claws.ops import verify_deletion_set
from ..common.errors import EXIT_NO, EXIT_OK, EXIT_UNEXPECTED, EXIT_UNKNOWN, ParseError, PreconditionError
from ..common.hashing import graph_fingerprint
from ..common.logging import get_logger
from ..common.paths import get_paths
from ..dblock.recognize import is_d_block_graph
from ..experiments.run import run_suite
from ..generators.gen import GenSpec, gen
from ..graph.classes import (
    Recognition,
    recognize_bipartite,
    recognize_block_graph,
    recognize_complete_bipartite,
    recognize_split,
)
from ..graph.core import Graph
from ..graph.io import format_edge_list, read_edge_list, read_vertex_set, write_edge_list
from ..reductions.base import Hypergraph, NaeFormula, ReductionArtifact
from ..reductions.io import (
    format_hypergraph,
    format_nae_formula,
    read_hypergraph,
    read_nae_formula,
    save_artifact,
    write_hypergraph,
    write_nae_formula,
)
from ..reductions.nae_claw import reduce_nae3sat_to_clawvd
from ..reductions.nae_cvd import reduce_nae3sat_to_cvd
from ..reductions.split import reduce_hvc_to_split
from ..reductions.wrappers import attach_leaves, extend_claw_to_dclaw, wrap_diameter2, wrap_diameter3_bipartite
from ..solvers.base import SolveRequest
from ..solvers.dispatch import solve_auto, solve_decision
from .report import Report, graph_summary, solution_payload

log = get_logger(__name__)

CLASSES = ("bipartite", "split", "block", "dblock:<d>", "complete-bipartite")
REDUCTIONS = ("vc-leaves", "diam2", "diam3-bip", "nae-cvd", "nae-claw", "hvc-split", "claw-extend")


# ----------------------------------------------------------------------
# solve / verify / recognize
# ----------------------------------------------------------------------
def cmd_solve(
    input_path: str | Path,
    d: int,
    *,
    k: int | None = None,
    algo: str = "auto",
    branch_cap: int | None = None,
) -> Report:
    """
    Solve one edge-list instance.

    Optimization mode without k; decision mode with k, where the answer
    "no" gives exit code 4 and "unknown" gives exit code 5.
    """
    g = read_edge_list(input_path)
    req = SolveRequest(g, d, budget_k=k, algorithm=algo, branch_cap=branch_cap)  # type: ignore[arg-type]
    command = {"name": "solve", "input": str(input_path), "d": d, "k": k, "algo": algo, "branch_cap": branch_cap}
    report = Report(command=command, instance=graph_summary(g, d))

    if k is None:
        sol = solve_auto(req)
        report.result = {"mode": "optimize", **solution_payload(sol)}
        return report

    decision = solve_decision(req)
    answer = {True: "yes", False: "no", None: "unknown"}[decision.answer]
    report.result = {"mode": "decide", "k": k, "answer": answer}
    if decision.solution is not None:
        key = "witness" if decision.answer else "best_found"
        report.result[key] = solution_payload(decision.solution)
    if decision.answer is False:
        report.exit_code = EXIT_NO
    elif decision.answer is None:
        report.exit_code = EXIT_UNKNOWN
    return report


def cmd_verify(input_path: str | Path, set_path: str | Path, d: int) -> Report:
    """Check a deletion set against an edge-list instance."""
    g = read_edge_list(input_path)
    s = read_vertex_set(set_path, g.n)
    ok, witness = verify_deletion_set(g, s, d)
    return Report(
        command={"name": "verify", "input": str(input_path), "set": str(set_path), "d": d},
        instance=graph_summary(g, d),
        result={
            "valid": ok,
            "size": len(s),
            "witness": witness.to_dict() if witness is not None else None,
        },
    )


def _recognize(g: Graph, graph_class: str) -> Recognition:
    match graph_class:
        case "bipartite":
            return recognize_bipartite(g)
        case "split":
            return recognize_split(g)
        case "block":
            return recognize_block_graph(g)
        case "complete-bipartite":
            return recognize_complete_bipartite(g)
    if graph_class.startswith("dblock:"):
        try:
            d = int(graph_class.split(":", 1)[1])
        except ValueError:
            raise PreconditionError(f"class {graph_class!r} needs an integer d, e.g. dblock:3") from None
        analysis = is_d_block_graph(g, d)
        witness: dict[str, Any] = {}
        if not analysis.is_d_block:
            block = analysis.tree.blocks[analysis.violating_block]  # type: ignore[index]
            witness = {
                "block": analysis.violating_block,
                "vertices": sorted(block),
                "reason": analysis.reason,
            }
        else:
            witness = {
                "endvertices": analysis.vertices_with_role("endvertex"),
                "pseudo_endvertices": analysis.vertices_with_role("pseudo_endvertex"),
            }
        return Recognition(graph_class, analysis.is_d_block, witness)
    log.error("[dclaw_py.cli.commands] unknown class %s", graph_class)
    raise PreconditionError(f"unknown class {graph_class!r}; expected one of {', '.join(CLASSES)}")


def cmd_recognize(input_path: str | Path, graph_class: str) -> Report:
    g = read_edge_list(input_path)
    rec = _recognize(g, graph_class)
    return Report(
        command={"name": "recognize", "input": str(input_path), "class": graph_class},
        instance=graph_summary(g),
        result={"class": rec.graph_class, "member": rec.member, "witness": rec.witness},
    )


# ----------------------------------------------------------------------
# reduce
# ----------------------------------------------------------------------
def _require_d(kind: str, d: int | None) -> int:
    if d is None:
        raise PreconditionError(f"--from {kind} needs --d")
    return d


def _fixed_d(kind: str, d: int | None, fixed: int) -> None:
    if d is not None and d != fixed:
        raise PreconditionError(f"--from {kind} produces d = {fixed}, got --d {d}")


def _build_artifact(kind: str, source: str | Path, d: int | None, k: int | None) -> tuple[ReductionArtifact, dict[str, Any]]:
    match kind:
        case "vc-leaves" | "diam2" | "diam3-bip" | "claw-extend":
            g = read_edge_list(source)
            builder = {
                "vc-leaves": attach_leaves,
                "diam2": wrap_diameter2,
                "diam3-bip": wrap_diameter3_bipartite,
                "claw-extend": extend_claw_to_dclaw,
            }[kind]
            return builder(g, _require_d(kind, d), k), graph_summary(g)
        case "nae-cvd" | "nae-claw":
            f = read_nae_formula(source)
            _fixed_d(kind, d, 2 if kind == "nae-cvd" else 3)
            art = reduce_nae3sat_to_cvd(f) if kind == "nae-cvd" else reduce_nae3sat_to_clawvd(f)
            return art, {"variables": f.n, "clauses": f.m}
        case "hvc-split":
            h = read_hypergraph(source)
            return reduce_hvc_to_split(h, d, k), {"n": h.n, "m": h.m, "r": h.r}
    log.error("[dclaw_py.cli.commands] unknown reduction %s", kind)
    raise PreconditionError(f"unknown reduction {kind!r}; expected one of {', '.join(REDUCTIONS)}")


def cmd_reduce(
    kind: str,
    source: str | Path,
    *,
    d: int | None = None,
    k: int | None = None,
    out_prefix: str | Path | None = None,
) -> Report:
    """
    Build a reduction and write `<prefix>.edges` plus `<prefix>.json`.

    The default prefix is results/reductions/<kind>-<fingerprint>.
    """
    art, source_summary = _build_artifact(kind, source, d, k)
    fingerprint = graph_fingerprint(art.graph.n, art.graph.edges())
    prefix = Path(out_prefix) if out_prefix is not None else get_paths().results_reductions / f"{kind}-{fingerprint}"
    edges_path, json_path = save_artifact(art, prefix)
    return Report(
        command={"name": "reduce", "from": kind, "source": str(source), "d": d, "k": k, "out": str(prefix)},
        instance=source_summary,
        result={
            "kind": art.kind,
            "n": art.graph.n,
            "m": art.graph.edge_count,
            "d": art.d,
            "budget_k": art.budget_k,
            "fingerprint": fingerprint,
            "assertions": art.metadata,
            "files": [str(edges_path), str(json_path)],
        },
    )


# ----------------------------------------------------------------------
# gen / suite
# ----------------------------------------------------------------------
def parse_params(pairs: list[str]) -> dict[str, Any]:
    """Parse repeated key=value flags; values are read as YAML scalars."""
    params: dict[str, Any] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ParseError(f"parameter {pair!r} is not key=value")
        params[key.strip()] = yaml.safe_load(value)
    return params


def _instance_text(obj: Graph | Hypergraph | NaeFormula) -> str:
    if isinstance(obj, Graph):
        return format_edge_list(obj)
    if isinstance(obj, Hypergraph):
        return format_hypergraph(obj)
    return format_nae_formula(obj)


def _write_instance(obj: Graph | Hypergraph | NaeFormula, path: Path) -> Path:
    if isinstance(obj, Graph):
        return write_edge_list(obj, path)
    if isinstance(obj, Hypergraph):
        return write_hypergraph(obj, path)
    return write_nae_formula(obj, path)


def cmd_gen(
    model: str,
    params: Mapping[str, Any],
    seed: int,
    *,
    out: str | Path | None = None,
) -> Report:
    """
    Generate one instance; write it to `out` or embed its text in the report.

    Raises
    ------
    PreconditionError
        Unknown model or out-of-range parameters.
    GenerationError
        Retry exhaustion.
    """
    spec = GenSpec(model, dict(params), seed)
    try:
        obj = gen(spec)
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise PreconditionError(str(exc)) from exc

    text = _instance_text(obj)
    result: dict[str, Any] = {"type": type(obj).__name__}
    if isinstance(obj, Graph):
        result.update(graph_summary(obj))
    if out is not None:
        result["file"] = str(_write_instance(obj, Path(out)))
    else:
        result["text"] = text
    return Report(command={"name": "gen", **spec.to_dict(), "out": str(out) if out else None}, result=result)


def cmd_suite(name: str, *, config: str | Path | None = None, save: bool = True) -> Report:
    """
    Run a named acceptance suite.

    Exit code 0 when every item passes, 1 otherwise.
    """
    res = run_suite(name, config, save_results=save)
    return Report(
        command={"name": "suite", "suite": name, "config": str(config) if config else None, "save": save},
        result={
            "status": res.status,
            "n_items": res.n_items,
            "n_success": res.n_success,
            "n_failed": res.n_failed,
            "items": [
                {"name": r["name"], "passed": r["status"] == "success", **({"error": r["error"]} if "error" in r else {})}
                for r in res.items
            ],
        },
        exit_code=EXIT_OK if res.n_failed == 0 else EXIT_UNEXPECTED,
    )
