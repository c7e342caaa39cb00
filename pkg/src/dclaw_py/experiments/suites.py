"""
dclaw_py.experiments.suites
===========================
Item builders of the acceptance suites.

Every suite is a function `params -> list[SuiteItem]`. An item is a named
zero-argument check that returns a JSON-ready payload, or raises
`SuiteCheckFailed` (or any other exception) when the property it tests
does not hold. The runner in `dclaw_py.experiments.run` executes items in
order and records their status.

Suites
------
gadget-optima       exact optima of every reduction gadget
budget-identities   nae certificates have size exactly budget_k
equality-transfer   optimum transfer across every budget-preserving wrapper
dblock-optimality   d-block elimination vs brute force
solver-agreement    search tree vs brute force, greedy ratio, K_{a,b} closed form
structural          bipartite / degree / split / diameter properties of outputs

Exact optima of constructed graphs come from `solve_min_fpt`; optima of
source instances come from the brute-force oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Mapping

from ..claws.ops import first_claw, verify_deletion_set
from ..dblock.recognize import is_d_block_graph
from ..dblock.solve import solve_d_block
from ..generators.gen import GenSpec, gen
from ..graph.classes import recognize_split
from ..graph.core import Graph, bipartition, connected_components, delete_vertices, diameter
from ..reductions.nae_claw import (
    build_claw_aux_Ajk,
    build_claw_aux_Hij,
    build_claw_aux_Hj,
    build_claw_clause_gadget,
    build_claw_variable_gadget,
    reduce_nae3sat_to_clawvd,
)
from ..reductions.nae_cvd import build_cvd_clause_gadget, build_cvd_variable_gadget, lab, reduce_nae3sat_to_cvd
from ..reductions.nae_solutions import solution_from_nae_assignment
from ..reductions.oracles import graph_vertex_cover, hvc_oracle, nae_oracle
from ..reductions.split import reduce_hvc_to_split, solution_maps_split
from ..reductions.wrappers import attach_leaves, extend_claw_to_dclaw, wrap_diameter2, wrap_diameter3_bipartite
from ..solvers.approx import greedy_approx
from ..solvers.bipartite import solve_complete_bipartite
from ..solvers.exact import solve_brute_force, solve_fpt, solve_min_fpt


class SuiteCheckFailed(AssertionError):
    """A suite item observed a property violation."""


@dataclass(frozen=True)
class SuiteItem:
    name: str
    check: Callable[[], dict[str, Any]]


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise SuiteCheckFailed(message)


def _opt(g: Graph, d: int) -> int:
    return solve_min_fpt(g, d).size


def _valid_pairs(g: Graph, d: int) -> list[tuple[int, int]]:
    return [p for p in combinations(range(g.n), 2) if verify_deletion_set(g, p, d)[0]]


# ----------------------------------------------------------------------
# gadget-optima
# ----------------------------------------------------------------------
def _optimum_item(name: str, g: Graph, d: int, expected: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        size = _opt(g, d)
        expect(size == expected, f"optimum {size}, expected {expected}")
        return {"n": g.n, "d": d, "optimum": size, "expected": expected}
    return SuiteItem(name, check)


def _forced_exceeds(g: Graph, d: int, forced: tuple[int, ...], optimum: int) -> bool:
    """True when no optimum contains every vertex of `forced`."""
    rest = delete_vertices(g, forced).graph
    return solve_fpt(rest, d, optimum - len(forced)) is None


def _check_cvd_clause() -> dict[str, Any]:
    lg = build_cvd_clause_gadget()
    g = lg.graph
    expect(_opt(g, 2) == 11, "CVD clause gadget optimum is not 11")
    excluded = {}
    for name in ("c", "c'"):
        trio = tuple(lg.vertex(lab(name, 1, k)) for k in (1, 2, 3))
        excluded[name] = _forced_exceeds(g, 2, trio, 11)
        expect(excluded[name], f"an optimum contains all three {name} vertices")
    return {"n": g.n, "d": 2, "optimum": 11, "all_three_excluded": excluded}


def _check_hij() -> dict[str, Any]:
    lg = build_claw_aux_Hij()
    g = lg.graph
    expect(_opt(g, 3) == 2, "H_ij optimum is not 2")
    v = lg.vertex(lab("v", 1, 1))
    with_v = [p for p in _valid_pairs(g, 3) if v in p]
    expected = tuple(sorted((v, lg.vertex(lab("b2", 1, 1)))))
    expect(with_v == [expected], f"optima containing v: {with_v}")
    return {"optimum": 2, "optima_with_v": [list(p) for p in with_v]}


def _check_ajk() -> dict[str, Any]:
    lg = build_claw_aux_Ajk()
    g = lg.graph
    expect(_opt(g, 3) == 2, "A_jk optimum is not 2")
    optima = _valid_pairs(g, 3)
    expected = tuple(sorted((lg.vertex(lab("x", 1, 1)), lg.vertex(lab("z", 1, 1)))))
    expect(optima == [expected], f"optima: {optima}")
    return {"optimum": 2, "optima": [list(p) for p in optima]}


def _check_hj() -> dict[str, Any]:
    lg = build_claw_aux_Hj()
    g = lg.graph
    expect(_opt(g, 3) == 8, "H_j optimum is not 8")
    cs = [lg.vertex(lab("c", 1, k)) for k in (1, 2, 3)]
    extendable: dict[str, bool] = {}
    for size in (1, 2, 3):
        for t in combinations(cs, size):
            rest = delete_vertices(g, t).graph
            extendable[",".join(map(str, t))] = solve_fpt(rest, 3, 8 - size) is not None
    for key, ok in extendable.items():
        proper = key.count(",") < 2
        expect(ok == proper, f"8-set containing {{{key}}}: {ok}")
    neighbors = sorted({u for c in cs for u in g.neighbors(c)})
    for u in neighbors:
        expect(_forced_exceeds(g, 3, (u,), 8), f"an 8-set contains neighbor {lg.labels[u]}")
    return {"optimum": 8, "extendable": extendable, "excluded_neighbors": neighbors}


def gadget_optima_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    items: list[SuiteItem] = []
    for m in params["variable_m"]:
        items.append(_optimum_item(f"cvd-variable-m{m}", build_cvd_variable_gadget(m).graph, 2, 2 * m))
    items.append(SuiteItem("cvd-clause", _check_cvd_clause))
    items.append(SuiteItem("claw-Hij", _check_hij))
    items.append(SuiteItem("claw-Ajk", _check_ajk))
    items.append(SuiteItem("claw-Hj", _check_hj))
    for m in params["variable_m"]:
        items.append(_optimum_item(f"claw-variable-m{m}", build_claw_variable_gadget(m).graph, 3, 2 * m))
    items.append(_optimum_item("claw-clause", build_claw_clause_gadget().graph, 3, 16))
    return items


# ----------------------------------------------------------------------
# budget-identities
# ----------------------------------------------------------------------
def _budget_item(idx: int, seed: int, n: int, m: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        f = gen(GenSpec("nae_formula", {"n": n, "m": m, "satisfiable": True}, seed))
        assignment = nae_oracle(f)
        expect(assignment is not None, "generator returned an unsatisfiable formula")
        sizes = {}
        for reduce, per_clause in ((reduce_nae3sat_to_cvd, 11), (reduce_nae3sat_to_clawvd, 16)):
            art = reduce(f)
            chosen = solution_from_nae_assignment(art, assignment)
            expected = 2 * f.m * f.n + per_clause * f.m
            expect(len(chosen) == expected == art.budget_k, f"{art.kind}: {len(chosen)} != {expected}")
            expect(verify_deletion_set(art.graph, chosen, art.d)[0], f"{art.kind}: invalid deletion set")
            sizes[art.kind] = len(chosen)
        return {"n": f.n, "m": f.m, "seed": seed, "sizes": sizes}
    return SuiteItem(f"formula-{idx}", check)


def budget_identity_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    span = max(1, int(params["max_n"]) - 2)
    return [
        _budget_item(
            idx,
            int(params["seed"]) * 100_003 + idx,
            3 + idx % span,
            1 + (idx // span) % int(params["max_m"]),
        )
        for idx in range(int(params["count"]))
    ]


# ----------------------------------------------------------------------
# equality-transfer
# ----------------------------------------------------------------------
def _gnp(n: int, p: float, seed: int) -> Graph:
    g = gen(GenSpec("gnp", {"n": n, "p": p}, seed))
    assert isinstance(g, Graph)
    return g


def _leaves_item(idx: int, g: Graph, ds: list[int]) -> SuiteItem:
    def check() -> dict[str, Any]:
        vc = len(graph_vertex_cover(g))
        after = {}
        for d in ds:
            after[d] = _opt(attach_leaves(g, d).graph, d)
            expect(after[d] == vc, f"d={d}: vertex cover {vc}, after leaves {after[d]}")
        return {"n": g.n, "vertex_cover": vc, "after": after}
    return SuiteItem(f"leaves-{idx}", check)


def _diameter_item(idx: int, g: Graph, ds: list[int]) -> SuiteItem:
    def check() -> dict[str, Any]:
        payload: dict[str, Any] = {"n": g.n, "bipartite": bipartition(g).valid}
        for d in ds:
            base = solve_brute_force(g, d).size
            two = _opt(wrap_diameter2(g, d).graph, d)
            expect(two == base + 1, f"d={d}: diameter-2 optimum {two}, base {base}")
            payload[f"d{d}"] = {"base": base, "diam2": two}
            if payload["bipartite"]:
                three = _opt(wrap_diameter3_bipartite(g, d).graph, d)
                expect(three == base + 2, f"d={d}: diameter-3 optimum {three}, base {base}")
                payload[f"d{d}"]["diam3"] = three
        return payload
    return SuiteItem(f"diameter-{idx}", check)


def _split_item(idx: int, n: int, m: int, seed: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        h = gen(GenSpec("uniform_hypergraph", {"n": n, "m": m, "r": 2, "require_disjoint": True}, seed))
        cover = hvc_oracle(h)
        art = reduce_hvc_to_split(h)
        sol = solve_min_fpt(art.graph, art.d)
        expect(sol.size == len(cover), f"cover {len(cover)}, split optimum {sol.size}")
        forward = solution_maps_split(art, "vc_to_claw")(cover)
        expect(verify_deletion_set(art.graph, forward, art.d)[0], "mapped cover is not a deletion set")
        backward = solution_maps_split(art, "claw_to_vc")(sol.vertices)
        expect(all(set(e) & set(backward) for e in h.edges), "mapped deletion set is not a cover")
        return {"n": n, "m": h.m, "seed": seed, "optimum": sol.size}
    return SuiteItem(f"split-{idx}", check)


def _extend_item(idx: int, g: Graph, ds: list[int]) -> SuiteItem:
    def check() -> dict[str, Any]:
        base = solve_brute_force(g, 3).size
        after = {}
        for d in ds:
            after[d] = _opt(extend_claw_to_dclaw(g, d).graph, d)
            expect(after[d] == base, f"d={d}: claw optimum {base}, extended {after[d]}")
        return {"n": g.n, "claw_optimum": base, "after": after}
    return SuiteItem(f"extend-{idx}", check)


def equality_transfer_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    seed = int(params["seed"]) * 100_003
    p = float(params["leaves_p"])
    items: list[SuiteItem] = []

    max_n = int(params["leaves_max_n"])
    for idx in range(int(params["leaves_count"])):
        g = _gnp(1 + idx % max_n, p, seed + idx)
        if len(connected_components(g)) == 1:
            items.append(_leaves_item(idx, g, list(params["leaves_d"])))

    max_n = int(params["diameter_max_n"])
    for idx in range(int(params["diameter_count"])):
        g = _gnp(1 + idx % max_n, p, seed + 10_000 + idx)
        items.append(_diameter_item(idx, g, list(params["diameter_d"])))

    max_n = int(params["split_max_n"])
    for idx in range(int(params["split_count"])):
        n = 4 + idx % max(1, max_n - 3)
        items.append(_split_item(idx, n, 2 + idx % 4, seed + 20_000 + idx))

    max_n = int(params["extend_max_n"])
    for idx in range(int(params["extend_count"])):
        g = _gnp(1 + idx % max_n, p, seed + 30_000 + idx)
        items.append(_extend_item(idx, g, list(params["extend_d"])))
    return items


# ----------------------------------------------------------------------
# dblock-optimality
# ----------------------------------------------------------------------
def _dblock_item(idx: int, n: int, d: int, seed: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        g = gen(GenSpec("d_block_graph", {"n": n, "d": d}, seed))
        assert isinstance(g, Graph)
        sol = solve_d_block(g, d)
        oracle = solve_brute_force(g, d)
        expect(sol.size == oracle.size, f"dblock {sol.size}, brute force {oracle.size}")
        ends = set(is_d_block_graph(g, d).vertices_with_role("endvertex"))
        expect(not ends & set(sol.vertices), "solution deletes an endvertex")
        return {"n": n, "d": d, "seed": seed, "size": sol.size}
    return SuiteItem(f"dblock-{idx}", check)


def dblock_optimality_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    ds = list(params["d"])
    span = max(1, int(params["max_n"]) - 2)
    seed = int(params["seed"]) * 100_003
    return [
        _dblock_item(idx, 3 + idx % span, ds[idx % len(ds)], seed + idx)
        for idx in range(int(params["count"]))
    ]


# ----------------------------------------------------------------------
# solver-agreement
# ----------------------------------------------------------------------
def _agreement_item(idx: int, g: Graph, d: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        oracle = solve_brute_force(g, d).size
        fpt = _opt(g, d)
        expect(fpt == oracle, f"fpt {fpt}, brute force {oracle}")
        greedy = greedy_approx(g, d)
        expect(verify_deletion_set(g, greedy.vertices, d)[0], "greedy set is invalid")
        expect(greedy.size <= (d + 1) * oracle, f"greedy {greedy.size} above {(d + 1)} x {oracle}")
        return {"n": g.n, "d": d, "optimum": oracle, "greedy": greedy.size}
    return SuiteItem(f"random-{idx}", check)


def _bipartite_item(a: int, b: int, d: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        g = gen(GenSpec("complete_bipartite", {"a": a, "b": b}))
        assert isinstance(g, Graph)
        closed = solve_complete_bipartite(g, d).size
        oracle = solve_brute_force(g, d).size
        expect(closed == oracle, f"closed form {closed}, brute force {oracle}")
        return {"a": a, "b": b, "d": d, "optimum": oracle}
    return SuiteItem(f"K{a},{b}-d{d}", check)


def solver_agreement_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    ds = list(params["d"])
    span = max(1, int(params["max_n"]) - 1)
    seed = int(params["seed"]) * 100_003
    p = float(params["p"])
    items = [
        _agreement_item(idx, _gnp(2 + idx % span, p, seed + idx), ds[idx % len(ds)])
        for idx in range(int(params["count"]))
    ]
    side = int(params["bipartite_max_side"])
    for a in range(1, side + 1):
        for b in range(a, side + 1):
            for d in range(1, int(params["bipartite_max_d"]) + 1):
                items.append(_bipartite_item(a, b, d))
    return items


# ----------------------------------------------------------------------
# structural
# ----------------------------------------------------------------------
def _structural_item(idx: int, seed: int) -> SuiteItem:
    def check() -> dict[str, Any]:
        f = gen(GenSpec("nae_formula", {"n": 3 + idx % 3, "m": 1 + idx % 3}, seed))
        for art in (reduce_nae3sat_to_cvd(f), reduce_nae3sat_to_clawvd(f)):
            expect(bipartition(art.graph).valid, f"{art.kind} output is not bipartite")
            expect(art.graph.max_degree() <= 3, f"{art.kind} output exceeds degree 3")

        r = 2 + idx % 2
        n = 3 * r + idx % 3
        m = 2 + (idx // 2) % 2
        h = gen(GenSpec("uniform_hypergraph", {"n": n, "m": m, "r": r, "require_disjoint": True}, seed))
        split = reduce_hvc_to_split(h)
        expect(split.graph.n == h.n * h.m + h.n, "split output has the wrong order")
        expect(recognize_split(split.graph).member, "split output is not split")
        expect(first_claw(split.graph, split.d + 1) is None, "split output has a (d+1)-claw")

        g = gen(GenSpec("gnp", {"n": 2 + idx % 5, "p": 0.4}, seed))
        assert isinstance(g, Graph)
        expect(diameter(wrap_diameter2(g, 3).graph) == 2, "diameter-2 wrapper")
        bip = bipartition(g).valid
        if bip:
            expect(diameter(wrap_diameter3_bipartite(g, 3).graph) == 3, "diameter-3 wrapper")
        return {"formula": [f.n, f.m], "split_n": split.graph.n, "gnp_bipartite": bip}
    return SuiteItem(f"structure-{idx}", check)


def structural_items(params: Mapping[str, Any]) -> list[SuiteItem]:
    seed = int(params["seed"]) * 100_003
    return [_structural_item(idx, seed + idx) for idx in range(int(params["count"]))]


SUITE_BUILDERS: dict[str, Callable[[Mapping[str, Any]], list[SuiteItem]]] = {
    "gadget-optima": gadget_optima_items,
    "budget-identities": budget_identity_items,
    "equality-transfer": equality_transfer_items,
    "dblock-optimality": dblock_optimality_items,
    "solver-agreement": solver_agreement_items,
    "structural": structural_items,
}
