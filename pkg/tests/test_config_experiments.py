from __future__ import annotations

import json
import logging

import pandas as pd
import pytest

from dclaw_py.common.errors import PreconditionError
from dclaw_py.config.load import SUITE_DEFAULTS, SUITES, SuiteConfig, default_suite_config, load_suite_config
from dclaw_py.experiments import run as run_mod
from dclaw_py.experiments.run import run_suite
from dclaw_py.experiments.suites import (
    SuiteCheckFailed,
    SuiteItem,
    budget_identity_items,
    dblock_optimality_items,
    equality_transfer_items,
    gadget_optima_items,
    solver_agreement_items,
    structural_items,
)

SLOW_GADGETS = {"cvd-clause", "claw-Hj", "claw-clause"}


# ----------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------
def test_defaults_cover_every_suite():
    cfg = default_suite_config()
    assert set(cfg.suites) == set(SUITES)
    assert cfg.section("dblock-optimality") == SUITE_DEFAULTS["dblock-optimality"]
    assert cfg.source is None
    with pytest.raises(KeyError):
        cfg.section("nope")


def test_yaml_sections_merge_over_defaults(write_text):
    p = write_text("cfg.yaml", "suites:\n  structural:\n    count: 2\n  dblock-optimality: {}\n")
    cfg = load_suite_config(p)
    assert cfg.source == p
    assert cfg.section("structural") == {"count": 2, "seed": 6}
    assert cfg.section("dblock-optimality") == SUITE_DEFAULTS["dblock-optimality"]
    assert "suites" in cfg and cfg.get("missing", 1) == 1
    assert cfg.to_dict()["suites"]["structural"]["count"] == 2


def test_empty_yaml_gives_defaults(write_text):
    cfg = load_suite_config(write_text("empty.yaml", ""))
    assert cfg.section("structural") == SUITE_DEFAULTS["structural"]


def test_unknown_sections_are_reported(write_text, caplog):
    with caplog.at_level(logging.WARNING, logger="dclaw_py"):
        load_suite_config(write_text("cfg.yaml", "suites:\n  mystery: {count: 1}\n"))
    assert "mystery" in caplog.text


@pytest.mark.parametrize("text", ["- 1\n- 2\n", "suites: [1, 2]\n", "suites:\n  structural: 3\n"])
def test_malformed_configs(write_text, text):
    with pytest.raises(ValueError):
        load_suite_config(write_text("bad.yaml", text))


def test_missing_explicit_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_suite_config(tmp_path / "absent.yaml")


def test_shipped_configs_load():
    for name in ("suites/acceptance.yaml", "suites/smoke.yaml"):
        cfg = load_suite_config(name)
        assert set(SUITES) <= set(cfg.suites)
    assert load_suite_config("suites/smoke.yaml").section("structural")["count"] == 5


# ----------------------------------------------------------------------
# runner
# ----------------------------------------------------------------------
def _config(**sections) -> SuiteConfig:
    cfg = default_suite_config()
    for name, values in sections.items():
        cfg.suites[name.replace("_", "-")].update(values)
    return cfg


def test_structural_suite_writes_artifacts(tmp_path):
    result = run_suite("structural", _config(structural={"count": 2}), output_dir=tmp_path)
    assert result.status == "success"
    assert (result.n_items, result.n_success, result.n_failed) == (2, 2, 0)
    assert result.metadata["artifact_dir"] == str(tmp_path)

    summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
    assert summary["status"] == "success" and summary["failed_items"] == []
    full = json.loads((tmp_path / "result.json").read_text(encoding="utf-8"))
    assert [item["name"] for item in full["items"]] == ["structure-0", "structure-1"]
    table = pd.read_csv(tmp_path / "items.csv")
    assert list(table["status"]) == ["success", "success"]


def test_failed_items_do_not_stop_the_suite(monkeypatch):
    def broken(raise_as):
        def check():
            raise raise_as("boom")
        return check

    items = [
        SuiteItem("ok", lambda: {"x": 1}),
        SuiteItem("check", broken(SuiteCheckFailed)),
        SuiteItem("crash", broken(RuntimeError)),
    ]
    monkeypatch.setitem(run_mod.SUITE_BUILDERS, "structural", lambda params: items)
    result = run_suite("structural", default_suite_config(), save_results=False)
    assert result.status == "partial_success"
    assert [r["status"] for r in result.items] == ["success", "failed", "failed"]
    assert result.items[1]["error"] == "boom"
    assert "RuntimeError" in result.items[2]["error"]
    assert "artifact_dir" not in result.metadata


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suite("everything", default_suite_config(), save_results=False)


# ----------------------------------------------------------------------
# item builders on small parameters
# ----------------------------------------------------------------------
def _run_all(items):
    return [item.check() for item in items]


def test_gadget_items():
    items = gadget_optima_items({"variable_m": [1]})
    names = [item.name for item in items]
    assert names == ["cvd-variable-m1", "cvd-clause", "claw-Hij", "claw-Ajk", "claw-Hj", "claw-variable-m1", "claw-clause"]
    payloads = _run_all([item for item in items if item.name not in SLOW_GADGETS])
    assert payloads[0]["optimum"] == 2


@pytest.mark.slow
def test_slow_gadget_items():
    items = gadget_optima_items({"variable_m": [2, 3]})
    payloads = {item.name: item.check() for item in items if item.name in SLOW_GADGETS}
    assert payloads["cvd-clause"]["all_three_excluded"] == {"c": True, "c'": True}
    assert len(payloads["claw-Hj"]["excluded_neighbors"]) == 6
    assert payloads["claw-clause"]["optimum"] == 16


def test_budget_identity_items():
    payloads = _run_all(budget_identity_items({"count": 3, "seed": 1, "max_n": 4, "max_m": 2}))
    for p in payloads:
        assert p["sizes"]["nae-cvd"] == 2 * p["m"] * p["n"] + 11 * p["m"]
        assert p["sizes"]["nae-claw"] == 2 * p["m"] * p["n"] + 16 * p["m"]


def test_equality_transfer_items():
    params = dict(SUITE_DEFAULTS["equality-transfer"])
    params.update(
        leaves_count=4, leaves_max_n=4, diameter_count=3, diameter_max_n=4,
        split_count=2, split_max_n=5, extend_count=3, extend_max_n=4,
    )
    items = equality_transfer_items(params)
    assert any(item.name.startswith("split-") for item in items)
    _run_all(items)


def test_dblock_items():
    payloads = _run_all(dblock_optimality_items({"count": 4, "seed": 1, "max_n": 8, "d": [2, 3]}))
    assert [p["d"] for p in payloads] == [2, 3, 2, 3]


def test_solver_agreement_items():
    params = {"count": 4, "seed": 1, "max_n": 6, "d": [2, 3], "p": 0.4, "bipartite_max_side": 2, "bipartite_max_d": 2}
    items = solver_agreement_items(params)
    assert [item.name for item in items][4:] == ["K1,1-d1", "K1,1-d2", "K1,2-d1", "K1,2-d2", "K2,2-d1", "K2,2-d2"]
    _run_all(items)


def test_structural_items():
    payloads = _run_all(structural_items({"count": 3, "seed": 2}))
    assert all(p["split_n"] > 0 for p in payloads)
