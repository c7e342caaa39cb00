"""
dclaw_py.common.logging
=======================
Centralized logging configuration utilities for dclaw.

This module provides:
- A simple project-wide logging setup function (`setup_logging`)
- A lightweight logger factory (`get_logger`)

Design Goals
------------
1. Consistent log formatting across solvers, reductions and the CLI.
2. No duplicate handlers when imported or configured multiple times.
3. Keep standard output free for the structured CLI report, so the
   human-readable log goes to stderr.

Typical usage
-------------
At program entry point (CLI / main script):
    from dclaw_py.common.logging import setup_logging
    setup_logging("INFO")

In modules:
    from dclaw_py.common.logging import get_logger
    log = get_logger(__name__)
    log.info("[dclaw_py.solvers.dispatch] routed to dblock")

Log format example:
    [INFO] dclaw_py.solvers.dispatch: [dclaw_py.solvers.dispatch] routed to dblock
"""

from __future__ import annotations
import logging
import sys

_HANDLER_NAME = "dclaw-stderr"


def setup_logging(level: str = "INFO") -> None:
    """
    Configure the root logger for dclaw.

    Parameters
    ----------
    level : str
        Logging level as a string ("DEBUG", "INFO", "WARNING", ...).
        Unknown names fall back to INFO.

    Idempotency
    -----------
    Safe to call multiple times. The level is always updated, while the
    stderr handler is attached only once (recognized by its name).
    """
    lvl = getattr(logging, level.upper(), logging.INFO)

    root = logging.getLogger()
    root.setLevel(lvl)

    if any(h.get_name() == _HANDLER_NAME for h in root.handlers):
        return

    h = logging.StreamHandler(sys.stderr)
    h.set_name(_HANDLER_NAME)
    h.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))
    root.addHandler(h)


def get_logger(name: str) -> logging.Logger:
    """
    Return a module-specific logger.

    Parameters
    ----------
    name : str
        Typically __name__ of the calling module.

    Returns
    -------
    logging.Logger
        A logger instance scoped to the provided name.
    """
    return logging.getLogger(name)
