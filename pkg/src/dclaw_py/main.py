# src/dclaw_py/main.py
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .cli.commands import CLASSES, REDUCTIONS, cmd_gen, cmd_recognize, cmd_reduce, cmd_solve, cmd_suite, cmd_verify, parse_params
from .cli.report import Report, collect_warnings
from .common.errors import EXIT_PARSE, DClawError, exit_code_for
from .common.logging import get_logger, setup_logging
from .config.load import SUITES
from .generators.gen import MODELS
from .solvers.base import ALGORITHMS

log = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dclaw", description="d-claw vertex deletion toolkit")
    ap.add_argument("--log-level", default="WARNING", help="Log level (DEBUG, INFO, WARNING, ...)")
    ap.add_argument("--timing", action="store_true", help="Include runtime_ms in the JSON report")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="Minimum d-claw deletion set, or decide size <= k")
    p.add_argument("input", help="Edge-list file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="Budget; switches to decision mode (exit 4 on no, 5 on unknown)")
    p.add_argument("--algo", default="auto", help=f"One of: {', '.join(ALGORITHMS)}")
    p.add_argument("--branch-cap", type=int, default=None, help="Search-tree node cap (env DCLAW_BRANCH_CAP)")

    p = sub.add_parser("verify", help="Check a deletion set")
    p.add_argument("input", help="Edge-list file")
    p.add_argument("set", help="Vertex-set file")
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("recognize", help="Test membership in a graph class")
    p.add_argument("input", help="Edge-list file")
    p.add_argument("--class", dest="graph_class", required=True, help=f"One of: {', '.join(CLASSES)}")

    p = sub.add_parser("reduce", help="Build a reduction artifact")
    p.add_argument("--from", dest="kind", required=True, help=f"One of: {', '.join(REDUCTIONS)}")
    p.add_argument("source", help="Source instance file")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="Source budget, shifted into budget_k")
    p.add_argument("--out", default=None, help="Output prefix for <prefix>.edges and <prefix>.json")

    p = sub.add_parser("gen", help="Generate a seeded random instance")
    p.add_argument("model", help=f"One of: {', '.join(MODELS)}")
    p.add_argument("--param", action="append", default=[], help="Model parameter key=value (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="Output file; the text goes into the report otherwise")

    p = sub.add_parser("suite", help="Run an acceptance suite")
    p.add_argument("name", help=f"One of: {', '.join(SUITES)}")
    p.add_argument("--config", default=None, help="Suite YAML (default suites/acceptance.yaml)")
    p.add_argument("--no-save", action="store_true", help="Do not write results/suites/<name>/")

    return ap


def _dispatch(args: argparse.Namespace) -> Report:
    match args.command:
        case "solve":
            return cmd_solve(args.input, args.d, k=args.k, algo=args.algo, branch_cap=args.branch_cap)
        case "verify":
            return cmd_verify(args.input, args.set, args.d)
        case "recognize":
            return cmd_recognize(args.input, args.graph_class)
        case "reduce":
            return cmd_reduce(args.kind, args.source, d=args.d, k=args.k, out_prefix=args.out)
        case "gen":
            return cmd_gen(args.model, parse_params(args.param), args.seed, out=args.out)
        case "suite":
            return cmd_suite(args.name, config=args.config, save=not args.no_save)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse usage errors count as parse errors
        return EXIT_PARSE if exc.code not in (0, None) else 0

    setup_logging(args.log_level)
    t0 = time.perf_counter()
    try:
        with collect_warnings() as warnings:
            report = _dispatch(args)
    except DClawError as exc:
        code = exit_code_for(exc)
        log.error("[dclaw_py.main] %s: %s", type(exc).__name__, exc)
        print(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}), file=sys.stdout)
        return code
    except Exception as exc:  # noqa: BLE001
        code = exit_code_for(exc)
        log.exception("[dclaw_py.main] unexpected failure")
        print(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": code}), file=sys.stdout)
        return code

    report.warnings = list(warnings)
    report.runtime_ms = (time.perf_counter() - t0) * 1000.0
    print(json.dumps(report.to_dict(include_timing=args.timing), indent=2, default=str))
    print(report.summary_line(), file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
