"""
dclaw_py.config.load
====================
Acceptance suite configuration loading.

Purpose
-------
Suite configuration files describe corpus sizes, seeds and size bounds of
the acceptance suites run by `dclaw suite`. This module provides:

1. `SuiteConfig`
   A thin dict-like wrapper around the normalized configuration. It
   supports attribute-style access (`cfg.suites`) and dictionary-style
   access (`cfg.get("suites", {})`).

2. `load_suite_config(...)`
   Loads a YAML file, resolves a relative path against the project root,
   validates the top-level structure and fills every suite section that is
   missing with its defaults.

File layout
-----------
    suites:
      dblock-optimality:
        count: 200
        seed: 4
        max_n: 14
        d: [2, 3]
      ...

Normalization behavior
----------------------
Each known suite section is merged over `SUITE_DEFAULTS`, key by key, so
a file may override a single number and inherit the rest.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator

import yaml

from ..common.logging import get_logger
from ..common.paths import get_paths

log = get_logger(__name__)

DEFAULT_SUITE_FILE = "suites/acceptance.yaml"

SUITE_DEFAULTS: dict[str, dict[str, Any]] = {
    "gadget-optima": {
        "variable_m": [1, 2, 3],
    },
    "budget-identities": {
        "count": 25,
        "seed": 2,
        "max_n": 4,
        "max_m": 2,
    },
    "equality-transfer": {
        "seed": 3,
        "leaves_count": 300,
        "leaves_max_n": 7,
        "leaves_d": [2, 3],
        "leaves_p": 0.4,
        "diameter_count": 60,
        "diameter_max_n": 6,
        "diameter_d": [2, 3],
        "split_count": 50,
        "split_max_n": 8,
        "extend_count": 60,
        "extend_max_n": 7,
        "extend_d": [4, 5],
    },
    "dblock-optimality": {
        "count": 200,
        "seed": 4,
        "max_n": 14,
        "d": [2, 3],
    },
    "solver-agreement": {
        "count": 500,
        "seed": 5,
        "max_n": 11,
        "d": [2, 3],
        "p": 0.35,
        "bipartite_max_side": 6,
        "bipartite_max_d": 4,
    },
    "structural": {
        "count": 20,
        "seed": 6,
    },
}

SUITES = tuple(SUITE_DEFAULTS)


@dataclass
class SuiteConfig:
    """
    Thin dict-like wrapper around a loaded suite configuration.

    Notes
    -----
    - `raw` stores the normalized configuration dictionary.
    - `raw["suites"]` always holds every name in `SUITES`.
    """

    raw: dict[str, Any] = field(default_factory=dict)
    source: Path | None = None

    @property
    def suites(self) -> dict[str, dict[str, Any]]:
        return self.raw.get("suites", {})

    def section(self, name: str) -> dict[str, Any]:
        """
        Parameters of one suite.

        Raises
        ------
        KeyError
            If the suite name is unknown.
        """
        if name not in self.suites:
            raise KeyError(name)
        return self.suites[name]

    # ------------------------------------------------------------------
    # Dict-like compatibility layer
    # ------------------------------------------------------------------
    def get(self, key: str, default: Any = None) -> Any:
        return self.raw.get(key, default)

    def __getitem__(self, key: str) -> Any:
        return self.raw[key]

    def __contains__(self, key: object) -> bool:
        return key in self.raw

    def __iter__(self) -> Iterator[str]:
        return iter(self.raw)

    def __len__(self) -> int:
        return len(self.raw)

    def to_dict(self) -> dict[str, Any]:
        return copy.deepcopy(self.raw)


def normalize_suite_config(raw: dict[str, Any]) -> dict[str, Any]:
    """Merge every known suite section over its defaults (in place)."""
    suites = raw.setdefault("suites", {})
    if suites is None:
        suites = raw["suites"] = {}
    if not isinstance(suites, dict):
        raise ValueError("'suites' must be a mapping of suite name to parameters")
    for name, defaults in SUITE_DEFAULTS.items():
        given = suites.get(name) or {}
        if not isinstance(given, dict):
            raise ValueError(f"suite section {name!r} must be a mapping")
        merged = copy.deepcopy(defaults)
        merged.update(given)
        suites[name] = merged
    unknown = sorted(set(suites) - set(SUITE_DEFAULTS))
    if unknown:
        log.warning("[dclaw_py.config.load] ignoring unknown suite sections %s", unknown)
    return raw


def default_suite_config() -> SuiteConfig:
    return SuiteConfig(raw=normalize_suite_config({}))


def load_suite_config(path: str | Path | None = None) -> SuiteConfig:
    """
    Load a suite configuration file and normalize its sections.

    Parameters
    ----------
    path : str | Path, optional
        Config file. Relative paths resolve against the project root.
        When omitted, `suites/acceptance.yaml` is used if present and the
        built-in defaults otherwise.

    Raises
    ------
    FileNotFoundError
        If an explicitly given file does not exist.
    ValueError
        If the YAML content is not a dictionary.
    """
    paths = get_paths()
    explicit = path is not None
    p = Path(path if explicit else DEFAULT_SUITE_FILE)
    if not p.is_absolute():
        p = (paths.root / p).resolve()

    if not p.exists():
        if explicit:
            raise FileNotFoundError(f"Suite config not found: {p}")
        log.debug("[dclaw_py.config.load] %s not found, using built-in defaults", p)
        return default_suite_config()

    with p.open("r", encoding="utf-8") as f:
        raw = yaml.safe_load(f)

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ValueError(f"Suite config YAML must load to a dictionary: {p}")

    return SuiteConfig(raw=normalize_suite_config(raw), source=p)
