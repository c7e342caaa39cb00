"""
dclaw_py.experiments.run
========================
Acceptance suite dispatcher.

Purpose
-------
This module provides the public entry point behind `dclaw suite`.

It is responsible for:
- loading the suite configuration (or accepting a preloaded one),
- building the items of the requested suite,
- running each item in isolation and collecting its status,
- saving result, summary and a tabular item export.

Item execution
--------------
Items run in order. A raised exception marks the item "failed" and the
run continues; the suite status is "success" when every item passed and
"partial_success" otherwise.

Artifacts
---------
results/suites/<suite>/result.json    full SuiteResult
results/suites/<suite>/summary.json   counts and configuration
results/suites/<suite>/items.csv      one row per item (pandas)

Public API
----------
- run_suite
- SuiteResult
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, is_dataclass
from pathlib import Path
from typing import Any

import pandas as pd

from ..common.errors import PreconditionError
from ..common.logging import get_logger
from ..common.paths import get_paths
from ..config.load import SUITES, SuiteConfig, load_suite_config
from .suites import SUITE_BUILDERS, SuiteCheckFailed, SuiteItem

__all__ = ["run_suite", "SuiteResult"]

log = get_logger(__name__)


@dataclass
class SuiteResult:
    """
    Summary dataclass for one suite execution.
    """

    status: str
    suite: str
    n_items: int
    n_success: int
    n_failed: int
    items: list[dict[str, Any]]
    metadata: dict[str, Any]


def _json_ready(obj: Any) -> Any:
    """
    Convert an object into a JSON-serializable form when possible.
    """
    if is_dataclass(obj) and not isinstance(obj, type):
        return _json_ready(asdict(obj))
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _save_json(data: Any, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_json_ready(data), indent=2) + "\n", encoding="utf-8")


def _save_items_csv(items: list[dict[str, Any]], path: Path) -> None:
    rows = []
    for item in items:
        row = {"name": item["name"], "status": item["status"], "error": item.get("error", "")}
        for key, value in (item.get("result") or {}).items():
            if isinstance(value, (int, float, str, bool)):
                row[key] = value
        rows.append(row)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(rows).to_csv(path, index=False)


def _resolve_suite(name: str) -> str:
    if name not in SUITE_BUILDERS:
        log.error("[dclaw_py.experiments.run] unknown suite: %s", name)
        raise PreconditionError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    return name


def _run_item(item: SuiteItem) -> dict[str, Any]:
    t0 = time.perf_counter()
    try:
        payload = item.check()
        record: dict[str, Any] = {"name": item.name, "status": "success", "result": payload}
    except SuiteCheckFailed as exc:
        log.warning("[dclaw_py.experiments.run] %s failed: %s", item.name, exc)
        record = {"name": item.name, "status": "failed", "error": str(exc)}
    except Exception as exc:  # noqa: BLE001
        log.warning("[dclaw_py.experiments.run] %s raised %r", item.name, exc)
        record = {"name": item.name, "status": "failed", "error": repr(exc)}
    record["elapsed_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    return record


def run_suite(
    name: str,
    config: SuiteConfig | str | Path | None = None,
    *,
    save_results: bool = True,
    output_dir: str | Path | None = None,
) -> SuiteResult:
    """
    Run one acceptance suite.

    Parameters
    ----------
    name : str
        Suite name (see `dclaw_py.config.load.SUITES`).
    config : SuiteConfig | str | Path, optional
        Loaded configuration or a YAML path; default `suites/acceptance.yaml`.
    save_results : bool, optional
        Whether to write result.json, summary.json and items.csv.
    output_dir : str | Path, optional
        Explicit artifact directory; default results/suites/<name>.

    Returns
    -------
    SuiteResult

    Raises
    ------
    PreconditionError
        If the suite name is unknown.
    """
    _resolve_suite(name)
    cfg = config if isinstance(config, SuiteConfig) else load_suite_config(config)
    params = cfg.section(name)

    t_wall_0 = time.time()
    items = SUITE_BUILDERS[name](params)
    log.info("[dclaw_py.experiments.run] suite %s: %d items", name, len(items))

    records = [_run_item(item) for item in items]
    n_failed = sum(1 for r in records if r["status"] != "success")

    result = SuiteResult(
        status="success" if n_failed == 0 else "partial_success",
        suite=name,
        n_items=len(records),
        n_success=len(records) - n_failed,
        n_failed=n_failed,
        items=records,
        metadata={
            "wall_time_sec": time.time() - t_wall_0,
            "params": params,
            "config_path": str(cfg.source) if cfg.source else None,
        },
    )
    log.info(
        "[dclaw_py.experiments.run] suite %s: %d/%d items passed",
        name, result.n_success, result.n_items,
    )

    if save_results:
        out_dir = Path(output_dir) if output_dir is not None else get_paths().results_suites / name
        summary = {
            "status": result.status,
            "suite": name,
            "n_items": result.n_items,
            "n_success": result.n_success,
            "n_failed": result.n_failed,
            "failed_items": [r["name"] for r in records if r["status"] != "success"],
            "wall_time_sec": result.metadata["wall_time_sec"],
            "params": params,
        }
        _save_json(result, out_dir / "result.json")
        _save_json(summary, out_dir / "summary.json")
        _save_items_csv(records, out_dir / "items.csv")
        result.metadata["artifact_dir"] = str(out_dir)
        log.info("[dclaw_py.experiments.run] saved suite artifacts to: %s", out_dir)

    return result
