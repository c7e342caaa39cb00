"""
dclaw_py.cli.report
===================
Structured command output.

Every command returns a `Report`. `main` prints `Report.to_dict()` as JSON
on standard output and a one-line human summary on standard error, so
scripts can pipe the JSON. Without `--timing` the JSON is byte-stable for
identical inputs and seeds.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator

from ..claws.ops import Solution
from ..common.errors import EXIT_OK
from ..common.hashing import graph_fingerprint
from ..graph.core import Graph


@dataclass
class Report:
    """
    Attributes
    ----------
    command : dict[str, Any]
        Echo of the command name and its resolved arguments.
    instance : dict[str, Any]
        n, m, d and the graph fingerprint (or the source-instance summary).
    result : dict[str, Any]
        Command-specific payload.
    warnings : list[str]
        Warning-level log messages emitted while the command ran.
    exit_code : int
        Process exit code; not part of the JSON record.
    runtime_ms : float | None
        Wall time, serialized only with include_timing.
    """

    command: dict[str, Any]
    instance: dict[str, Any] = field(default_factory=dict)
    result: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    runtime_ms: float | None = None

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        result = dict(self.result)
        if include_timing and self.runtime_ms is not None:
            result["runtime_ms"] = round(self.runtime_ms, 3)
        return {
            "command": self.command,
            "instance": self.instance,
            "result": result,
            "warnings": list(self.warnings),
        }

    def summary_line(self) -> str:
        name = self.command.get("name", "?")
        bits = [f"{k}={v}" for k, v in self.result.items() if isinstance(v, (int, str, bool)) and k != "text"]
        return f"dclaw {name}: " + " ".join(bits[:6])


def graph_summary(g: Graph, d: int | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "m": g.edge_count}
    if d is not None:
        out["d"] = d
    out["fingerprint"] = graph_fingerprint(g.n, g.edges())
    return out


def solution_payload(sol: Solution) -> dict[str, Any]:
    return {
        "vertices": list(sol.vertices),
        "size": sol.size,
        "certified_optimal": sol.certified_optimal,
        "algorithm_tag": sol.algorithm_tag,
        "details": sol.details,
    }


class _WarningCollector(logging.Handler):
    def __init__(self) -> None:
        super().__init__(level=logging.WARNING)
        self.messages: list[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


@contextmanager
def collect_warnings(logger_name: str = "dclaw_py") -> Iterator[list[str]]:
    """Collect WARNING and above from the package loggers into a list."""
    handler = _WarningCollector()
    logger = logging.getLogger(logger_name)
    logger.addHandler(handler)
    try:
        yield handler.messages
    finally:
        logger.removeHandler(handler)
