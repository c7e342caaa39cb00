"""
dclaw_py.common.errors
======================
Exception hierarchy shared by every dclaw module.

All errors derive from `DClawError`. Input and precondition errors also
derive from `ValueError` so that callers treating bad arguments generically
keep working. The CLI maps the families onto stable exit codes
(see `exit_code_for`).

Exit-code contract
------------------
0  success
1  unexpected failure
2  parse / usage error
3  precondition failure
4  decision mode answered "no"
5  decision mode answered "unknown" (search cap hit or greedy inconclusive)
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NO = 4
EXIT_UNKNOWN = 5


class DClawError(Exception):
    """Base class for all dclaw errors."""


# ----------------------------------------------------------------------
# Graph construction
# ----------------------------------------------------------------------
class GraphInputError(DClawError, ValueError):
    """Invalid vertex ids or edges passed to a graph constructor."""


class VertexRangeError(GraphInputError):
    """A vertex id lies outside [0, n)."""


class SelfLoopError(GraphInputError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphInputError):
    """The same undirected edge is listed twice."""


# ----------------------------------------------------------------------
# Text formats
# ----------------------------------------------------------------------
class ParseError(DClawError, ValueError):
    """Malformed input file.

    Parameters
    ----------
    message : str
        What went wrong.
    path : str, optional
        Source file, if known.
    line : int, optional
        1-based line number, if known.
    """

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line


# ----------------------------------------------------------------------
# Preconditions of solvers and reductions
# ----------------------------------------------------------------------
class PreconditionError(DClawError, ValueError):
    """An algorithm was applied outside its domain."""


class NotDBlockError(PreconditionError):
    pass


class NotCompleteBipartiteError(PreconditionError):
    pass


class NotBipartiteError(PreconditionError):
    pass


class NaeAssignmentError(PreconditionError):
    """Assignment leaves some clause all-true or all-false."""


class DegenerateInstanceError(PreconditionError):
    """Reduction input would give k >= |V| or an empty construction."""


class DisjointEdgeError(PreconditionError):
    """Some hyperedge meets every other hyperedge."""


class UniformityError(PreconditionError):
    pass


# ----------------------------------------------------------------------
# Runtime limits
# ----------------------------------------------------------------------
class BranchCapExceeded(DClawError, RuntimeError):
    """Bounded search tree exceeded its node cap."""

    def __init__(self, cap: int):
        super().__init__(f"branch-node cap of {cap} exceeded")
        self.cap = cap


class GenerationError(DClawError, RuntimeError):
    """A generator could not produce a valid instance within its retries."""


def exit_code_for(exc: BaseException) -> int:
    """Map an exception onto the CLI exit-code contract."""
    if isinstance(exc, (ParseError, GraphInputError)):
        return EXIT_PARSE
    if isinstance(exc, (PreconditionError, GenerationError)):
        return EXIT_PRECONDITION
    return EXIT_UNEXPECTED
