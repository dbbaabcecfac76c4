"""Theorem-level checks: r-partite or the clique-of-blobs; bipartite or the cycle-of-blobs."""

from __future__ import annotations

from ..coloring import is_k_colorable
from ..graph import Graph, is_bipartite
from ..parity import OddCycleFamily
from .recognize import recognize_bc_construction, recognize_g_construction
from .report import FamilyParams, TheoremParams, VerificationReport, _flag, freeness_check, make_report


def check_theorem_main(G: Graph, params: TheoremParams,
                       budget: int | None = None) -> VerificationReport:
    """Conclusion: ``G`` is r-partite, or ``G`` is isomorphic to ``G_{r+1}``."""
    r, L = params.r, params.cycle_length
    status, data = freeness_check(G, L, budget)
    pre = {f"C{L}-free": status, "min_degree>=n/(2r+2)": _flag(params.degree_floor_ok(G))}
    witnesses: dict = {"freeness": data} if data else {}
    holds: bool | None
    colored = is_k_colorable(G, r, budget)
    if colored.found:
        witnesses["r_partition"] = colored.witness.classes()
        holds = True
    else:
        rec = recognize_g_construction(G, r)
        witnesses["recognition"] = rec.to_dict()
        holds = True if rec else (False if colored.absent else None)
        if colored.exceeded:
            witnesses["coloring"] = "budget_exceeded"
    return make_report("main", pre, params.regime_checks(G.n, min_r=3), holds, witnesses)


def check_theorem_main2(G: Graph, family: OddCycleFamily,
                        budget: int | None = None) -> VerificationReport:
    """Conclusion: ``G`` is bipartite, or ``G`` is isomorphic to ``BC_{2p+1}(n)``.

    ``p`` and ``k`` come from the family: ``C_{2p+1}`` is its shortest missing
    odd cycle and ``C_{2k+1}`` its longest member.
    """
    params = FamilyParams(family)
    status, data = freeness_check(G, family, budget)
    pre = {"family-free": status, "min_degree>=n/(2(2p+1))": _flag(params.degree_floor_ok(G))}
    witnesses: dict = {"p": params.p, "k": params.k, "family": family.sorted()}
    if data:
        witnesses["freeness"] = data
    check = is_bipartite(G)
    if check.bipartite:
        witnesses["bipartition"] = [sorted(part) for part in check.parts()]
        holds = True
    else:
        witnesses["odd_cycle"] = list(check.odd_cycle)
        rec = recognize_bc_construction(G, params.p)
        witnesses["recognition"] = rec.to_dict()
        holds = rec.recognized
    return make_report("main2", pre, params.regime_checks(G.n), holds, witnesses)
