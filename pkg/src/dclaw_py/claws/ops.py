"""
dclaw_py.claws.ops
==================
Detection, enumeration and certification of induced d-claws.

A d-claw is an induced K_{1,d}: a center adjacent to d pairwise
non-adjacent leaves. Searching a center amounts to finding an independent
set of size d inside its neighborhood; d is a small constant in every use
case, so a pruned depth-first enumeration over the sorted neighborhood is
used. The enumeration yields leaf sets in lexicographic order, which gives
the deterministic witness contract: lowest center, then least leaf set.

All searches accept a `banned` vertex set and behave as if those vertices
were deleted. Solvers use this to test G - S without building G - S, and
witnesses come out in original vertex ids.

Public API
----------
- DClaw, Solution
- find_d_claw, is_d_claw_free, enumerate_d_claws
- verify_deletion_set
- first_claw (banned-set variant used by the solvers)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Iterable, Iterator

from ..common.errors import VertexRangeError
from ..common.logging import get_logger
from ..graph.core import Graph

log = get_logger(__name__)


@dataclass(frozen=True, order=True)
class DClaw:
    """One induced d-claw witness, leaves sorted ascending."""

    center: int
    leaves: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.leaves)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Center first, then leaves ascending (the FPT branch order)."""
        return (self.center, *self.leaves)

    def to_dict(self) -> dict[str, Any]:
        return {"center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class Solution:
    """
    A d-claw deletion set.

    Attributes
    ----------
    vertices : tuple[int, ...]
        Deleted vertices, sorted ascending.
    d : int
        Claw order.
    certified_optimal : bool
        True when the producing algorithm guarantees minimum size.
    algorithm_tag : str
        Producing algorithm ("brute", "fpt", "greedy", ...).
    details : dict
        Algorithm-specific extras (lower bounds, traces, fallbacks).
    """

    vertices: tuple[int, ...]
    d: int
    certified_optimal: bool
    algorithm_tag: str
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @classmethod
    def of(cls, vertices: Iterable[int], d: int, *, certified: bool, tag: str, **details: Any) -> "Solution":
        return cls(tuple(sorted(set(vertices))), d, certified, tag, dict(details))


def _check_d(d: int) -> None:
    if d < 1:
        raise ValueError(f"claw order d must be >= 1, got {d}")


def _independent_subsets(g: Graph, candidates: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """Independent `size`-subsets of `candidates` (sorted), lexicographic order."""
    nb = g.neighbor_sets
    chosen: list[int] = []

    def extend(pool: list[int]) -> Iterator[tuple[int, ...]]:
        need = size - len(chosen)
        if need == 0:
            yield tuple(chosen)
            return
        for i, u in enumerate(pool):
            if len(pool) - i < need:
                return
            rest = [w for w in pool[i + 1:] if w not in nb[u]]
            if len(rest) < need - 1:
                continue
            chosen.append(u)
            yield from extend(rest)
            chosen.pop()

    yield from extend(candidates)


def iter_claws(g: Graph, d: int, banned: frozenset[int] | set[int] = frozenset()) -> Iterator[DClaw]:
    """All induced d-claws of G - banned, by center then leaf set."""
    _check_d(d)
    for c in range(g.n):
        if c in banned:
            continue
        cands = [w for w in g.adjacency[c] if w not in banned]
        if len(cands) < d:
            continue
        for leaves in _independent_subsets(g, cands, d):
            yield DClaw(c, leaves)


def first_claw(g: Graph, d: int, banned: frozenset[int] | set[int] = frozenset()) -> DClaw | None:
    return next(iter_claws(g, d, banned), None)


def find_d_claw(g: Graph, d: int) -> DClaw | None:
    """
    Return the first induced d-claw (lowest center, least leaf set) or None.

    Parameters
    ----------
    g : Graph
    d : int
        Claw order, d >= 1.
    """
    return first_claw(g, d)


def is_d_claw_free(g: Graph, d: int) -> bool:
    return find_d_claw(g, d) is None


def enumerate_d_claws(g: Graph, d: int, limit: int | None = None) -> list[DClaw]:
    """
    All induced d-claws in deterministic order, truncated at `limit`.

    A claw is identified by its (center, leaf set) pair, so for d = 1 every
    edge is listed once per endpoint.
    """
    it = iter_claws(g, d)
    return list(it if limit is None else islice(it, limit))


def verify_deletion_set(g: Graph, s: Iterable[int], d: int) -> tuple[bool, DClaw | None]:
    """
    Check whether G - s is d-claw-free.

    Returns
    -------
    tuple[bool, DClaw | None]
        (True, None) if valid, else (False, witness) with the witness in
        the ids of g.

    Raises
    ------
    VertexRangeError
        If s holds a vertex outside [0, n).
    """
    banned = set()
    for v in s:
        if not 0 <= v < g.n:
            raise VertexRangeError(f"vertex {v} out of range [0, {g.n})")
        banned.add(v)
    witness = first_claw(g, d, banned)
    return witness is None, witness
