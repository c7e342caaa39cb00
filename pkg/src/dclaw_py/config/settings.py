"""
dclaw_py.config.settings
========================
Runtime defaults shared by the solvers and the CLI.

Environment overrides
---------------------
DCLAW_BRANCH_CAP
    Default branch-node cap of the bounded search tree in `auto` mode.
    The CLI flag `--branch-cap` takes precedence.
"""

from __future__ import annotations

import os

from ..common.logging import get_logger

log = get_logger(__name__)

BRANCH_CAP_ENV = "DCLAW_BRANCH_CAP"
DEFAULT_BRANCH_CAP = 10_000_000

# auto mode solves exactly by subset enumeration up to this many vertices
AUTO_BRUTE_FORCE_MAX_N = 20

# brute force logs a size warning above this many vertices
BRUTE_FORCE_WARN_N = 24


def default_branch_cap() -> int:
    """
    Resolve the default branch-node cap.

    Returns
    -------
    int
        Value of DCLAW_BRANCH_CAP if set to a positive integer, else 10**7.
    """
    raw = os.environ.get(BRANCH_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_BRANCH_CAP
    try:
        cap = int(raw)
    except ValueError:
        log.warning("[dclaw_py.config.settings] ignoring non-integer %s=%r", BRANCH_CAP_ENV, raw)
        return DEFAULT_BRANCH_CAP
    if cap <= 0:
        log.warning("[dclaw_py.config.settings] ignoring non-positive %s=%r", BRANCH_CAP_ENV, raw)
        return DEFAULT_BRANCH_CAP
    return cap
