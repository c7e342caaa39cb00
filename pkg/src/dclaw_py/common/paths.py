"""
dclaw_py.common.paths
=====================
Centralized project path management for dclaw.

This module provides:
- Automatic project root discovery (via pyproject.toml)
- Structured access to the suites/ and results/ directories

Directory Layout
----------------
<project_root>/
│
├── suites/              acceptance suite configs (*.yaml)
│
└── results/
    ├── suites/          one directory per executed suite
    └── reductions/      default output location for `dclaw reduce`

It does NOT create directories.
"""

from __future__ import annotations
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ProjectPaths:
    root: Path
    suites: Path
    results: Path
    results_suites: Path
    results_reductions: Path


def discover_project_root(start: Path | None = None) -> Path:
    # find pyproject.toml upwards
    p = (start or Path.cwd()).resolve()
    for parent in [p] + list(p.parents):
        if (parent / "pyproject.toml").exists():
            return parent
    return p


def get_paths(start: Path | None = None) -> ProjectPaths:
    root = discover_project_root(start)
    results = root / "results"
    return ProjectPaths(
        root=root,
        suites=root / "suites",
        results=results,
        results_suites=results / "suites",
        results_reductions=results / "reductions",
    )
