"""Lemma-level checks: common neighborhoods, core sizes, short odd cycles, layer structure."""

from __future__ import annotations

from dataclasses import dataclass

from ..cores import (MAX_EXACT_VERTICES, certify_strong_2k_core, exact_maximum_2k_core,
                     exact_maximum_strong_core, find_extension, greedy_max_strong_core)
from ..errors import BudgetExceeded, InputError
from ..graph import Graph, articulation_points, as_vertex_set, is_bipartite
from ..parity import PathWitness, odd_girth
from .report import (INCONCLUSIVE, PASS, SKIPPED, TheoremParams, VerificationReport,
                     _flag, freeness_check, make_report)


def _hypotheses(G: Graph, params: TheoremParams, budget: int | None) -> tuple[dict, dict]:
    status, data = freeness_check(G, params.cycle_length, budget)
    pre = {f"C{params.cycle_length}-free": status,
           "min_degree>=n/(2r+2)": _flag(params.degree_floor_ok(G))}
    return pre, ({"freeness": data} if data else {})


def check_common_neighborhood_bound(G: Graph, path: PathWitness | list[int], params: TheoremParams,
                                    budget: int | None = None) -> VerificationReport:
    """Count common neighbors of the ends of an even path that lie off the path; bound ``15r``."""
    path = path if isinstance(path, PathWitness) else PathWitness(tuple(path))
    if not path.is_valid(G) or path.order % 2:
        raise InputError("expected a valid even path (even number of vertices)")
    x, y = path.ends
    pre, extra = _hypotheses(G, params, budget)
    pre["path_order<=2k"] = _flag(path.order <= 2 * params.k)
    common = (G.neighbors(x) & G.neighbors(y)) - set(path.vertices)
    bound = 15 * params.r
    witnesses = {"path": list(path.vertices), "common_neighbors": sorted(common),
                 "count": len(common), "bound": bound, **extra}
    return make_report("lemma-cn", pre, params.regime_checks(G.n), len(common) <= bound, witnesses)


def check_core_size_bounds(G: Graph, params: TheoremParams, method: str = "auto",
                           budget: int | None = None) -> VerificationReport:
    """Compare maximum 2k-core and strong-2k-core sizes with ``2r+2`` and ``r+1``.

    ``method`` is "exact" (subset enumeration, n <= 16), "greedy" (extension
    from a shortest odd cycle, any n) or "auto".  Greedy sizes are lower
    bounds on the maxima: a violation they exhibit is real, a pass is not.
    """
    if method not in ("auto", "exact", "greedy"):
        raise InputError(f"unknown method {method!r}")
    exact = method == "exact" or (method == "auto" and G.n <= MAX_EXACT_VERTICES)
    pre, extra = _hypotheses(G, params, budget)
    k, r = params.k, params.r
    notes = []
    try:
        if exact:
            strong = exact_maximum_strong_core(G, k, budget)
            core2k = exact_maximum_2k_core(G, k, budget)
        else:
            try:
                strong, _ = greedy_max_strong_core(G, k, budget)
            except InputError:
                strong = frozenset()
            core2k = strong
            notes.append("greedy sizes are lower bounds: a pass here is not a proof")
    except BudgetExceeded:
        return make_report("core-bounds", pre, params.regime_checks(G.n), None,
                           {"method": "exact" if exact else "greedy", **extra}, notes)
    witnesses = {
        "method": "exact" if exact else "greedy",
        "strong_core": sorted(strong), "strong_core_size": len(strong), "strong_bound": r + 1,
        "core": sorted(core2k), "core_size": len(core2k), "core_bound": 2 * r + 2,
        **extra,
    }
    holds = len(strong) <= r + 1 and len(core2k) <= 2 * r + 2
    return make_report("core-bounds", pre, params.regime_checks(G.n), holds, witnesses, notes)


def check_shortest_odd_cycle_bound(G: Graph, r: int) -> VerificationReport:
    """A non-bipartite graph with ``δ >= n/(2r+2)`` has odd girth at most ``4r+3``.

    This statement carries no threshold on n, so the regime is just ``r >= 2``.
    """
    if r < 1:
        raise InputError("r must be positive")
    pre = {"non_bipartite": _flag(not is_bipartite(G).bipartite),
           "min_degree>=n/(2r+2)": _flag(G.n > 0 and min(G.degree_sequence()) * (2 * r + 2) >= G.n)}
    bound = 2 * (2 * r + 1) + 1
    found = odd_girth(G)
    if found is None:
        return make_report("odd-girth", pre, {"r>=2": _flag(r >= 2)}, None, {"bound": bound})
    length, cycle = found
    witnesses = {"odd_girth": length, "cycle": list(cycle.vertices), "bound": bound}
    return make_report("odd-girth", pre, {"r>=2": _flag(r >= 2)}, length <= bound, witnesses)


@dataclass(frozen=True)
class NeighborhoodLayers:
    """Per core vertex ``x_i``: ``N_i = N(x_i) - H``, ``N1_i = N(N_i)``, ``N2_i = N(N1_i) - H``."""

    core: tuple[int, ...]
    first: tuple[frozenset[int], ...]
    second: tuple[frozenset[int], ...]
    third: tuple[frozenset[int], ...]

    @classmethod
    def build(cls, G: Graph, H) -> "NeighborhoodLayers":
        core = tuple(sorted(as_vertex_set(G, H)))
        hset = set(core)
        first, second, third = [], [], []
        for x in core:
            ni = frozenset(G.neighbors(x) - hset)
            n1 = frozenset(G.neighborhood(ni))
            n2 = frozenset(G.neighborhood(n1) - hset)
            first.append(ni)
            second.append(n1)
            third.append(n2)
        return cls(core, tuple(first), tuple(second), tuple(third))

    def disjointness(self) -> dict[str, bool]:
        """Pairwise disjointness of the layers across different core vertices."""
        l = len(self.core)
        pairs = [(i, j) for i in range(l) for j in range(l) if i != j]
        return {
            "N_i pairwise disjoint": all(not self.first[i] & self.first[j] for i, j in pairs),
            "N1_i pairwise disjoint": all(not self.second[i] & self.second[j] for i, j in pairs),
            "N2_i pairwise disjoint": all(not self.third[i] & self.third[j] for i, j in pairs),
            "N1_i, N2_j disjoint": all(not self.second[i] & self.third[j] for i, j in pairs),
        }


def _independent(G: Graph, S: frozenset[int]) -> bool:
    return all(not (G.neighbors(v) & S) for v in S)


def _complete_between(G: Graph, A: frozenset[int], B: frozenset[int]) -> bool:
    return not (A & B) and all(B <= G.neighbors(a) for a in A)


def _maximality(G: Graph, core: frozenset[int], k: int, budget: int | None) -> dict[str, str]:
    if G.n <= MAX_EXACT_VERTICES:
        try:
            best = exact_maximum_strong_core(G, k, budget)
        except BudgetExceeded:
            return {"H_maximum": INCONCLUSIVE}
        return {"H_maximum": _flag(len(core) >= len(best))}
    # Exact maximality is out of reach; require at least that no extension step applies.
    if len(core) > 2 * k - 2:
        return {"H_maximum": SKIPPED, "H_extension_maximal": PASS}
    try:
        step = find_extension(G, core, k, budget, check=False)
    except BudgetExceeded:
        return {"H_maximum": SKIPPED, "H_extension_maximal": INCONCLUSIVE}
    return {"H_maximum": SKIPPED, "H_extension_maximal": _flag(step is None)}


def check_structure_lemma(G: Graph, H, params: TheoremParams,
                          budget: int | None = None) -> VerificationReport:
    """Layer structure around a maximum strong-2k-core ``H`` with ``3 <= |H| <= r+1``.

    With ``|H| = r+1`` each ``N1_i`` and ``N2_i`` is independent of size
    ``n/(2r+2)`` and they span a complete bipartite graph.  With ``|H| <= r``
    every core vertex is a cut vertex.
    """
    core = as_vertex_set(G, H)
    if len(core) < 3:
        raise InputError("the structure check needs a core of at least 3 vertices")
    if certify_strong_2k_core(G, core, params.k, budget) is None:
        raise InputError("H is not a strong-2k-core of G")
    r = params.r
    pre, extra = _hypotheses(G, params, budget)
    pre["3<=|H|<=r+1"] = _flag(3 <= len(core) <= r + 1)
    pre.update(_maximality(G, core, params.k, budget))

    layers = NeighborhoodLayers.build(G, core)
    witnesses: dict = {"core": list(layers.core), "layer_disjointness": layers.disjointness(), **extra}
    if len(core) == r + 1:
        per_vertex = []
        for x, n1, n2 in zip(layers.core, layers.second, layers.third):
            per_vertex.append({
                "vertex": x,
                "N1_size": len(n1),
                "N2_size": len(n2),
                "N1_independent": _independent(G, n1),
                "N2_independent": _independent(G, n2),
                "N1_size_ok": len(n1) * (2 * r + 2) == G.n,
                "N2_size_ok": len(n2) * (2 * r + 2) == G.n,
                "complete_bipartite": _complete_between(G, n1, n2),
            })
        witnesses["case"] = "i"
        witnesses["layers"] = per_vertex
        holds = all(all(v for key, v in row.items() if isinstance(v, bool)) for row in per_vertex)
    else:
        cuts = articulation_points(G)
        witnesses["case"] = "ii"
        witnesses["cut_vertices"] = {str(x): x in cuts for x in layers.core}
        holds = all(x in cuts for x in layers.core)
    return make_report("structure", pre, params.regime_checks(G.n), holds, witnesses)
