"""
dclaw_py.reductions.base
========================
Source-instance types and the artifact every reduction returns.

Purpose
-------
- `Hypergraph`, `NaeFormula`: validated source instances.
- `LabeledGraph`: a gadget graph whose vertices carry provenance labels
  such as "v_{1,2}" or "c'_{1,3}".
- `ReductionArtifact`: constructed graph, claw order, budget, labels and a
  structured index back to the source instance.
- `GadgetBuilder`: label-addressed graph construction shared by the gadget
  modules.

Design notes
------------
Vertex ids are assigned in insertion order, so a construction is fully
reproducible from its input. Labels are unique inside one artifact and
`ReductionArtifact.vertex(label)` resolves them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable

from ..common.errors import DegenerateInstanceError, GraphInputError, UniformityError
from ..common.logging import get_logger
from ..graph.core import Graph, from_edge_list

log = get_logger(__name__)


@dataclass(frozen=True)
class Hypergraph:
    """
    r-uniform hypergraph on vertices 0..n-1.

    Edges are stored as sorted tuples in input order.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise UniformityError(f"uniformity r must be >= 2, got {self.r}")
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise UniformityError(f"edge {e} is not a set of {self.r} distinct vertices")
            if any(not 0 <= v < self.n for v in e):
                raise GraphInputError(f"edge {e} has a vertex outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, r, tuple(tuple(sorted(int(v) for v in e)) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class NaeFormula:
    """
    Monotone 3-CNF read as a not-all-equal instance.

    Variables are 1-based; each clause keeps its input order, which fixes
    the clause positions k = 1, 2, 3 used by the gadgets.
    """

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for c in self.clauses:
            if len(c) != 3 or len(set(c)) != 3:
                raise GraphInputError(f"clause {c} must hold three distinct variables")
            if any(not 1 <= x <= self.n for x in c):
                raise GraphInputError(f"clause {c} has a variable outside [1, {self.n}]")

    @classmethod
    def of(cls, n: int, clauses: Iterable[Iterable[int]]) -> "NaeFormula":
        return cls(n, tuple(tuple(int(x) for x in c) for c in clauses))  # type: ignore[misc]

    @property
    def m(self) -> int:
        return len(self.clauses)

    def is_nae(self, assignment: tuple[bool, ...]) -> bool:
        """True iff every clause has a true and a false variable."""
        if len(assignment) != self.n:
            raise ValueError(f"assignment has {len(assignment)} values for {self.n} variables")
        return all(len({assignment[x - 1] for x in c}) == 2 for c in self.clauses)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def vertex(self, label: str) -> int:
        return self.index[label]

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return sorted(self.index[lab] for lab in labels)


@dataclass(frozen=True)
class ReductionArtifact:
    """
    Output of a reduction.

    Attributes
    ----------
    kind : str
        Construction tag ("vc-leaves", "diam2", "nae-cvd", ...).
    graph : Graph
    d : int
        Claw order of the target problem.
    budget_k : int | None
        Target budget, or None when the caller has not supplied the
        source budget.
    vertex_labels : tuple[str, ...]
    source_map : dict[str, Any]
        JSON-ready index from source elements to vertex ids.
    metadata : dict[str, Any]
        Structural assertions performed and other construction facts.
    """

    kind: str
    graph: Graph
    d: int
    budget_k: int | None
    vertex_labels: tuple[str, ...]
    source_map: dict[str, Any] = field(default_factory=dict)
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.vertex_labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        if self.budget_k is not None and self.budget_k >= self.graph.n:
            log.error("[dclaw_py.reductions.base] budget %d not below |V| = %d", self.budget_k, self.graph.n)
            raise DegenerateInstanceError(f"budget k = {self.budget_k} is not below |V| = {self.graph.n}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.vertex_labels)}

    def vertex(self, label: str) -> int:
        return self._index[label]

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return sorted(self._index[lab] for lab in labels)

    def labeled(self) -> LabeledGraph:
        return LabeledGraph(self.graph, self.vertex_labels)


class GadgetBuilder:
    """
    Incremental, label-addressed graph construction.

    Examples
    --------
    >>> b = GadgetBuilder()
    >>> b.path("a", "b", "c")
    >>> b.build().graph.edge_count
    2
    """

    def __init__(self) -> None:
        self._labels: list[str] = []
        self._index: dict[str, int] = {}
        self._edges: list[tuple[int, int]] = []

    def add(self, label: str) -> int:
        if label in self._index:
            raise ValueError(f"duplicate vertex label {label!r}")
        self._index[label] = len(self._labels)
        self._labels.append(label)
        return self._index[label]

    def ensure(self, label: str) -> int:
        return self._index[label] if label in self._index else self.add(label)

    def id(self, label: str) -> int:
        return self._index[label]

    def edge(self, a: str, b: str) -> None:
        self._edges.append((self.ensure(a), self.ensure(b)))

    def path(self, *labels: str) -> None:
        for a, b in zip(labels, labels[1:]):
            self.edge(a, b)

    def cycle(self, *labels: str) -> None:
        self.path(*labels, labels[0])

    def absorb(self, other: LabeledGraph, rename: dict[str, str] | None = None) -> None:
        """Copy a labeled graph in, optionally renaming its labels."""
        ren = rename or {}
        names = [ren.get(lab, lab) for lab in other.labels]
        for name in names:
            self.add(name)
        for u, v in other.graph.edges():
            self.edge(names[u], names[v])

    @property
    def n(self) -> int:
        return len(self._labels)

    def build(self) -> LabeledGraph:
        return LabeledGraph(from_edge_list(len(self._labels), self._edges), tuple(self._labels))
