"""Executable checks of the structural results, swept over parameter grids.

Each check returns a :class:`VerificationOutcome` with status ``pass``,
``fail`` or ``inapplicable``.  Parameters outside a result's hypotheses are
reported as inapplicable together with what was observed, never skipped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from . import analysis
from .builder import DEFAULT_BUILD_CAP, SupertokenGraph, build, implicit_component, move_between
from .configs import format_config, iter_entries
from .counting import order_of, per_edge_multiplier
from .graph import (BaseGraph, check_coloring, check_odd_closed_walk, connected_components,
                    is_bipartite, is_connected, make_complete, make_cycle, make_path, make_star)
from .tokens import TokenMode, TokenSpec

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


@dataclass
class VerificationOutcome:
    theorem_id: str
    params: dict
    status: str
    witness: dict | None = None
    observed: dict = field(default_factory=dict)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"theorem": self.theorem_id, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.observed:
            out["observed"] = self.observed
        if self.note:
            out["note"] = self.note
        return out


def _params(g, k, s=None, mode=None) -> dict:
    out = {"graph": str(g), "k": k}
    if s is not None:
        out["s"] = s
    if mode is not None:
        out["mode"] = TokenMode.parse(mode).value
    return out


def _too_big(tid, params, order, cap) -> VerificationOutcome:
    return VerificationOutcome(tid, params, INAPPLICABLE, observed={"order": order},
                               note=f"order {order} above cap {cap}")


def verify_no_tree(g: BaseGraph, k: int, s: int, mode, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    spec = TokenSpec(k, s, mode)
    params = _params(g, k, spec.s, spec.mode)
    n = g.n
    if spec.mode is TokenMode.INDIST:
        in_range = 2 <= k and 2 * k <= n
    else:
        in_range = 2 <= k <= n - 2
    order = order_of(n, spec)
    if order > cap:
        return _too_big("no-tree", params, order, cap)
    st = build(g, spec, cap=cap)
    dim = analysis.cycle_space_dimension(st)
    observed = {"cycle_space_dimension": dim, "order": st.order, "size": st.size}
    if not (n >= 4 and is_connected(g) and in_range):
        return VerificationOutcome("no-tree", params, INAPPLICABLE, observed=observed,
                                   note="outside the hypotheses (connected, n >= 4, k range)")
    if dim >= 1:
        return VerificationOutcome("no-tree", params, PASS, observed=observed)
    return VerificationOutcome("no-tree", params, FAIL, witness=observed, observed=observed)


def _connectivity_witness(st: SupertokenGraph) -> dict:
    comps = connected_components(st)
    return {"config_a": st.label(comps[0][0]), "config_b": st.label(comps[1][0]),
            "components": len(comps)}


def _observe_connectivity(g, spec, cap, bfs_limit):
    """Returns (connected or None, witness or None, method)."""
    order = order_of(g.n, spec)
    if order == 0:
        return True, None, "empty"
    if order <= cap:
        st = build(g, spec, cap=cap)
        if is_connected(st):
            return True, None, "build"
        return False, _connectivity_witness(st), "build"
    if order > bfs_limit:
        return None, None, "too large"
    start = next(iter_entries(g.n, spec))
    seen = implicit_component(g, spec, start, bfs_limit)
    if seen is None:
        return None, None, "too large"
    if len(seen) == order:
        return True, None, "implicit-bfs"
    other = next(c for c in iter_entries(g.n, spec) if c not in seen)
    return False, {"config_a": format_config(start, spec.mode),
                   "config_b": format_config(other, spec.mode)}, "implicit-bfs"


def verify_connectivity(g: BaseGraph, k: int, s: int, mode, cap: int = DEFAULT_BUILD_CAP,
                        bfs_limit: int = 2_000_000) -> VerificationOutcome:
    spec = TokenSpec(k, s, mode)
    params = _params(g, k, spec.s, spec.mode)
    n, delta = g.n, g.max_degree
    if not is_connected(g):
        return VerificationOutcome("connectivity", params, INAPPLICABLE, note="base graph is disconnected")
    connected, witness, method = _observe_connectivity(g, spec, cap, bfs_limit)
    observed = {"connected": connected, "method": method, "max_degree": delta}
    if connected is None:
        return VerificationOutcome("connectivity", params, INAPPLICABLE, observed=observed,
                                   note="too large to traverse")
    if k < delta:
        claimed = True
    elif spec.mode is TokenMode.INDIST and k <= n:
        if (k, spec.s) == (n, 1):
            return VerificationOutcome("connectivity", params, INAPPLICABLE, observed=observed,
                                       note="stated exception: all n vertices hold one token")
        claimed = True
    else:
        claimed = False
    if not claimed:
        return VerificationOutcome("connectivity", params, INAPPLICABLE, observed=observed,
                                   witness=witness, note="no connectivity claim in this regime")
    if connected:
        return VerificationOutcome("connectivity", params, PASS, observed=observed)
    return VerificationOutcome("connectivity", params, FAIL, witness=witness, observed=observed)


def verify_star_bipartite(n: int, k: int, s: int, mode, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    g = make_star(n)
    spec = TokenSpec(k, s, mode)
    params = _params(g, k, spec.s, spec.mode)
    if not 1 <= s <= k <= n:
        return VerificationOutcome("star-bipartite", params, INAPPLICABLE, note="needs 1 <= s <= k <= n")
    order = order_of(g.n, spec)
    if order > cap:
        return _too_big("star-bipartite", params, order, cap)
    st = build(g, spec, cap=cap)
    result = is_bipartite(st)
    observed = {"order": st.order, "size": st.size}
    if not result:
        walk = [st.label(i) for i in result.odd_cycle]
        return VerificationOutcome("star-bipartite", params, FAIL, observed=observed,
                                   witness={"odd_cycle": walk,
                                            "walk_valid": check_odd_closed_walk(st, result.odd_cycle)})
    if not check_coloring(st, result.coloring):
        return VerificationOutcome("star-bipartite", params, FAIL, observed=observed,
                                   witness={"reason": "two-colouring does not check"})
    # every move along a star edge changes the number of tokens on the centre by one
    for i, j in st.edges():
        if (st.vertices[i].count(0) - st.vertices[j].count(0)) % 2 == 0:
            return VerificationOutcome("star-bipartite", params, FAIL, observed=observed,
                                       witness={"edge": [st.label(i), st.label(j)],
                                                "reason": "centre parity unchanged"})
    return VerificationOutcome("star-bipartite", params, PASS, observed=observed)


def _structure_outcome(tid, params, st, expect_label, copies, observed) -> VerificationOutcome:
    summary = analysis.component_summary(st)
    observed = dict(observed, components=dict(summary.counts()))
    if summary.is_uniform(expect_label, copies):
        return VerificationOutcome(tid, params, PASS, observed=observed)
    return VerificationOutcome(tid, params, FAIL, observed=observed,
                               witness={"expected": f"{copies} x {expect_label}",
                                        "components": dict(summary.counts())})


def _cycle_claim(tid, params, st, observed) -> VerificationOutcome:
    dim = analysis.cycle_space_dimension(st)
    observed = dict(observed, cycle_space_dimension=dim)
    if dim >= 1:
        return VerificationOutcome(tid, params, PASS, observed=observed)
    return VerificationOutcome(tid, params, FAIL, witness={"cycle_space_dimension": dim},
                               observed=observed)


def verify_path_structure(n: int, k: int, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    g = make_path(n)
    params = _params(g, k, 1, TokenMode.DIST)
    if not 1 <= k <= n:
        return VerificationOutcome("path-components", params, INAPPLICABLE, note="needs 1 <= k <= n")
    spec = TokenSpec(k, 1, TokenMode.DIST)
    order = order_of(n, spec)
    if order > cap:
        return _too_big("path-components", params, order, cap)
    st = build(g, spec, cap=cap)
    observed = {"order": st.order, "size": st.size}
    if k == n:
        return _structure_outcome("path-components", params, st, "IsolatedVertex", math.factorial(n), observed)
    if k == n - 1:
        return _structure_outcome("path-components", params, st, f"Path({n})", math.factorial(n - 1), observed)
    if k == 1:
        # one token on a path just walks the path; the cycle claim needs two tokens
        return VerificationOutcome("path-components", params, INAPPLICABLE,
                                   observed=dict(observed, cycle_space_dimension=analysis.cycle_space_dimension(st)),
                                   note="single token: the graph is the path itself")
    return _cycle_claim("path-components", params, st, observed)


def verify_cycle_structure(n: int, k: int, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    if n < 3:
        return VerificationOutcome("cycle-components", {"graph": f"cycle:{n}", "k": k}, INAPPLICABLE,
                                   note="cycles need n >= 3")
    g = make_cycle(n)
    params = _params(g, k, 1, TokenMode.DIST)
    if not 1 <= k <= n:
        return VerificationOutcome("cycle-components", params, INAPPLICABLE, note="needs 1 <= k <= n")
    spec = TokenSpec(k, 1, TokenMode.DIST)
    order = order_of(n, spec)
    if order > cap:
        return _too_big("cycle-components", params, order, cap)
    st = build(g, spec, cap=cap)
    observed = {"order": st.order, "size": st.size}
    if k == n:
        return _structure_outcome("cycle-components", params, st, "IsolatedVertex", math.factorial(n), observed)
    if k == n - 1:
        return _structure_outcome("cycle-components", params, st, f"Cycle({n * (n - 1)})",
                                  math.factorial(n - 2), observed)
    return _cycle_claim("cycle-components", params, st, observed)


def per_base_edge_counts(st: SupertokenGraph) -> dict:
    """Number of supertoken edges projecting onto each base edge."""
    counts = {e: 0 for e in st.base.sorted_edges()}
    for i, j in st.edges():
        x, y, _ = move_between(st.vertices[i], st.vertices[j], st.spec.mode)
        counts[(min(x, y), max(x, y))] += 1
    return counts


def verify_counts(g: BaseGraph, spec: TokenSpec, cap: int = DEFAULT_BUILD_CAP,
                  graph: SupertokenGraph | None = None) -> VerificationOutcome:
    """Formula order/size against an explicit build (or a supplied graph)."""
    params = _params(g, spec.k, spec.s, spec.mode)
    order_f = order_of(g.n, spec)
    if graph is None:
        if order_f > cap:
            return _too_big("counts", params, order_f, cap)
        graph = build(g, spec, cap=cap)
    mult = per_edge_multiplier(g.n, spec) if g.n >= 2 else 0
    size_f = g.size * mult
    observed = {"order_formula": order_f, "order_enumerated": graph.order,
                "size_formula": size_f, "size_enumerated": graph.size,
                "per_edge_multiplier": mult}
    if order_f == graph.order and size_f == graph.size:
        return VerificationOutcome("counts", params, PASS, observed=observed)
    witness = dict(observed)
    if g.size:
        short = {f"{u}-{v}": c for (u, v), c in per_base_edge_counts(graph).items() if c != mult}
        witness["base_edges_off_multiplier"] = short
    return VerificationOutcome("counts", params, FAIL, witness=witness, observed=observed)


def recheck_counts_witness(outcome: VerificationOutcome, graph: SupertokenGraph) -> bool:
    """Independently confirm a failed count witness against the graph it came from."""
    w = outcome.witness or {}
    recount = sum(len(r) for r in graph.adj) // 2
    if (w.get("order_enumerated") != len(graph.adj) or w.get("size_enumerated") != recount):
        return False
    return (w["order_formula"], w["size_formula"]) != (len(graph.adj), recount)


def verify_subset_chain(g: BaseGraph, k: int, mode, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    mode = TokenMode.parse(mode)
    params = _params(g, k, None, mode)
    top = order_of(g.n, TokenSpec(k, k, mode))
    if top > cap:
        return _too_big("chain", params, top, cap)
    graphs = [build(g, TokenSpec(k, s, mode), cap=cap) for s in range(1, k + 1)]
    induced = []
    for s in range(1, k):
        lo, hi = graphs[s - 1], graphs[s]
        lo_v, hi_v = set(lo.vertices), set(hi.vertices)
        missing_v = lo_v - hi_v
        if missing_v:
            return VerificationOutcome("chain", params, FAIL, witness={
                "s": s, "configuration": format_config(min(missing_v), mode)})
        lo_e, hi_e = lo.edge_pairs(), hi.edge_pairs()
        missing_e = lo_e - hi_e
        if missing_e:
            a, b = min(missing_e)
            return VerificationOutcome("chain", params, FAIL, witness={
                "s": s, "edge": [format_config(a, mode), format_config(b, mode)]})
        # recorded only: is the smaller graph induced on its vertex set?
        induced.append({(a, b) for a, b in hi_e if a in lo_v and b in lo_v} == lo_e)
    observed = {"orders": [x.order for x in graphs], "sizes": [x.size for x in graphs],
                "induced": induced}
    return VerificationOutcome("chain", params, PASS, observed=observed)


def _witness_outcome(tid, params, witness) -> VerificationOutcome:
    observed = {"vertices": len(witness.mapping)}
    if witness.check_result:
        return VerificationOutcome(tid, params, PASS, observed=observed)
    return VerificationOutcome(tid, params, FAIL, observed=observed, witness={
        "failure_edge": list(witness.failure_edge) if witness.failure_edge else None,
        "detail": witness.detail})


def verify_path_lemma(n: int, k: int) -> VerificationOutcome:
    params = {"graph": f"path:{n}", "k": k, "partner": f"path:{k + 1}", "partner_k": n - k}
    if not 1 <= k < n:
        return VerificationOutcome("path-isomorphism", params, INAPPLICABLE, note="needs 1 <= k < n")
    return _witness_outcome("path-isomorphism", params, analysis.verify_path_token_isomorphism(n, k))


def verify_complement(g: BaseGraph, k: int) -> VerificationOutcome:
    params = {"graph": str(g), "k": k, "partner_k": g.n - k}
    if not 0 < k < g.n:
        return VerificationOutcome("complement", params, INAPPLICABLE, note="needs 0 < k < n")
    return _witness_outcome("complement", params, analysis.verify_complement_isomorphism(g, k))


def verify_cartesian(g: BaseGraph, k: int, cap: int = DEFAULT_BUILD_CAP) -> VerificationOutcome:
    params = {"graph": str(g), "k": k}
    if g.n**k > cap:
        return _too_big("cartesian-power", params, g.n**k, cap)
    return _witness_outcome("cartesian-power", params, analysis.verify_cartesian_isomorphism(g, k, cap=cap))


SUITES = ("no-tree", "connectivity", "bipartite", "path", "cycle", "counts", "chain", "isomorphisms")

FAMILIES = {"path": make_path, "cycle": make_cycle, "star": make_star, "complete": make_complete}
_FAMILY_MIN = {"path": 1, "cycle": 3, "star": 1, "complete": 1}


@dataclass
class Grid:
    families: tuple = ("path", "cycle", "star", "complete")
    max_n: int = 6
    max_k: int = 4
    modes: tuple = (TokenMode.INDIST, TokenMode.DIST)

    def graphs(self) -> list[BaseGraph]:
        return [FAMILIES[f](n) for f in self.families
                for n in range(_FAMILY_MIN[f], self.max_n + 1)]


def run_suite(grid: Grid | None, suites: Iterable[str] = SUITES,
              max_order: int = 5000) -> list[VerificationOutcome]:
    """Run every selected check over the grid, in a fixed order."""
    if grid is None:
        return []
    suites = list(suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    out: list[VerificationOutcome] = []
    graphs = grid.graphs()
    ks = range(1, grid.max_k + 1)

    def specs(g):
        for k in ks:
            for s in range(1, k + 1):
                for mode in grid.modes:
                    yield k, s, mode

    for suite in suites:
        if suite == "no-tree":
            out += [verify_no_tree(g, k, s, m, cap=max_order) for g in graphs for k, s, m in specs(g)]
        elif suite == "connectivity":
            out += [verify_connectivity(g, k, s, m, cap=max_order, bfs_limit=max_order)
                    for g in graphs for k, s, m in specs(g)]
        elif suite == "bipartite" and "star" in grid.families:
            out += [verify_star_bipartite(n, k, s, m, cap=max_order)
                    for n in range(1, grid.max_n + 1) for k in ks if k <= n
                    for s in range(1, k + 1) for m in grid.modes]
        elif suite == "path" and "path" in grid.families:
            out += [verify_path_structure(n, k, cap=max_order)
                    for n in range(1, grid.max_n + 1) for k in range(1, n + 1)]
        elif suite == "cycle" and "cycle" in grid.families:
            out += [verify_cycle_structure(n, k, cap=max_order)
                    for n in range(3, grid.max_n + 1) for k in range(1, n + 1)]
        elif suite == "counts":
            out += [verify_counts(g, TokenSpec(k, s, m), cap=max_order)
                    for g in graphs for k, s, m in specs(g)]
        elif suite == "chain":
            out += [verify_subset_chain(g, k, m, cap=max_order)
                    for g in graphs for k in ks for m in grid.modes]
        elif suite == "isomorphisms":
            if "path" in grid.families:
                out += [verify_path_lemma(n, k) for n in range(2, grid.max_n + 1) for k in range(1, n)]
            out += [verify_complement(g, k) for g in graphs for k in range(1, g.n)]
            out += [verify_cartesian(g, k, cap=max_order) for g in graphs for k in ks]
    return out


def summarize(outcomes: list[VerificationOutcome]) -> dict:
    counts = {PASS: 0, FAIL: 0, INAPPLICABLE: 0}
    for o in outcomes:
        counts[o.status] += 1
    return counts
