from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclaw_py.common.errors import GenerationError
from dclaw_py.generators.gen import MODELS, GenSpec, gen
from dclaw_py.graph.classes import recognize_block_graph
from dclaw_py.graph.core import Graph, complete_bipartite_sides
from dclaw_py.reductions.base import Hypergraph, NaeFormula
from dclaw_py.reductions.oracles import nae_oracle


def _key(inst):
    if isinstance(inst, Graph):
        return inst.n, inst.edges()
    return inst


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec("gnp", {"n": 12, "p": 0.3}, 7),
        GenSpec("block_graph", {"n": 15}, 7),
        GenSpec("d_block_graph", {"n": 15, "d": 3}, 7),
        GenSpec("nae_formula", {"n": 5, "m": 4, "satisfiable": True}, 7),
        GenSpec("uniform_hypergraph", {"n": 6, "m": 3, "r": 2, "require_disjoint": True}, 7),
        GenSpec("complete_bipartite", {"a": 2, "b": 3}, 7),
    ],
)
def test_same_spec_same_instance(spec):
    assert _key(gen(spec)) == _key(gen(spec))


def test_models_are_listed():
    assert set(MODELS) == {"gnp", "block_graph", "d_block_graph", "nae_formula", "uniform_hypergraph", "complete_bipartite"}
    assert GenSpec("gnp", {"n": 3, "p": 0.5}, 1).to_dict() == {"model": "gnp", "params": {"n": 3, "p": 0.5}, "seed": 1}


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec("lattice", {"n": 4}),
        GenSpec("gnp", {"n": 4}),
        GenSpec("gnp", {"n": 4, "p": 1.5}),
        GenSpec("block_graph", {"n": 0}),
        GenSpec("d_block_graph", {"n": 5, "d": 1}),
        GenSpec("uniform_hypergraph", {"n": 2, "m": 1, "r": 3}),
        GenSpec("nae_formula", {"n": 2, "m": 1}),
    ],
)
def test_bad_specs(spec):
    with pytest.raises(ValueError):
        gen(spec)


def test_gnp_extremes():
    assert gen(GenSpec("gnp", {"n": 6, "p": 0.0})).edge_count == 0
    assert gen(GenSpec("gnp", {"n": 6, "p": 1.0})).edge_count == 15


def test_complete_bipartite_sides():
    g = gen(GenSpec("complete_bipartite", {"a": 2, "b": 3}))
    sides = complete_bipartite_sides(g)
    assert sides is not None
    assert sorted(sorted(s) for s in sides) == [[0, 1], [2, 3, 4]]


def test_exhausted_retries_raise():
    # two distinct pairs from three vertices always meet
    with pytest.raises(GenerationError):
        gen(GenSpec("uniform_hypergraph", {"n": 3, "m": 2, "r": 2, "require_disjoint": True}))


@given(st.integers(0, 2**32), st.integers(1, 20))
def test_block_graphs_are_block_graphs(seed, n):
    g = gen(GenSpec("block_graph", {"n": n}, seed))
    assert g.n == n
    assert recognize_block_graph(g).member


@settings(max_examples=30)
@given(st.integers(0, 2**32), st.integers(3, 6), st.integers(1, 4))
def test_satisfiable_formulas(seed, n, m):
    f = gen(GenSpec("nae_formula", {"n": n, "m": m, "satisfiable": True}, seed))
    assert isinstance(f, NaeFormula) and f.n == n and f.m == m
    assert nae_oracle(f) is not None


@given(st.integers(0, 2**32), st.integers(4, 8), st.integers(2, 4))
def test_hypergraphs_with_disjoint_partners(seed, n, m):
    h = gen(GenSpec("uniform_hypergraph", {"n": n, "m": m, "r": 2, "require_disjoint": True}, seed))
    assert isinstance(h, Hypergraph) and h.r == 2 and h.m == m
    assert len(set(h.edges)) == m
    sets = [frozenset(e) for e in h.edges]
    assert all(any(e.isdisjoint(f) for f in sets) for e in sets)
