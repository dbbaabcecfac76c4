"""Seeded local search for graphs where a theorem's conclusion fails below its regime.

The walk starts from a balanced complete bipartite graph and flips single
edges.  A flip is rejected if it would close a forbidden cycle (checked only
through the new edge) or break the degree floor.  Acceptance is simulated
annealing on a cheap chromatic lower bound; exact checks run only on
incumbents, i.e. graphs at least as good as the best seen so far.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from ..coloring import chromatic_number, greedy_clique
from ..constructions import complete_bipartite
from ..errors import BudgetExceeded, InputError
from ..graph import Graph, is_bipartite
from ..parity import OddCycleFamily, find_path
from .recognize import recognize_bc_construction, recognize_g_construction
from .report import (FAIL, NOT_APPLICABLE, PASS, FamilyParams, TheoremParams,
                     VerificationReport, make_report)

MOVE_BUDGET = 200_000


@dataclass(frozen=True)
class SearchConfig:
    """Either ``r`` and ``k`` (clique-of-blobs statement) or ``family`` (cycle-of-blobs statement)."""

    n: int
    seed: int = 0
    iterations: int = 10_000
    r: int | None = None
    k: int | None = None
    family: OddCycleFamily | None = None
    max_logged: int = 20
    start_temperature: float = 1.0
    end_temperature: float = 0.05

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InputError("search needs n >= 2")
        if self.iterations < 0:
            raise InputError("iterations must be non-negative")
        if self.family is None and (self.r is None or self.k is None):
            raise InputError("give either r and k, or a cycle family")

    @property
    def target(self) -> str:
        return "main2" if self.family is not None else "main"

    @property
    def lengths(self) -> list[int]:
        if self.family is not None:
            return self.family.sorted()
        return [2 * self.k + 1]

    def floor_ok(self, degree: int) -> bool:
        if self.family is not None:
            return degree * 2 * (2 * self.family.p + 1) >= self.n
        return degree * (2 * self.r + 2) >= self.n

    def regime(self) -> dict[str, str]:
        if self.family is not None:
            return FamilyParams(self.family).regime_checks(self.n)
        return TheoremParams(self.r, self.k).regime_checks(self.n, min_r=3)


def _proxy(G: Graph) -> int:
    clique = len(greedy_clique(G))
    return clique if clique >= 3 or is_bipartite(G).bipartite else 3


def _closes_forbidden_cycle(G: Graph, u: int, v: int, lengths: list[int]) -> bool:
    # Conservative: a search that runs out of budget counts as closing a cycle.
    for L in lengths:
        if L > G.n:
            continue
        out = find_path(G, u, v, min_order=L, max_order=L, budget=MOVE_BUDGET)
        if not out.absent:
            return True
    return False


def _conclusion(G: Graph, config: SearchConfig) -> tuple[bool, dict]:
    chi, cert = chromatic_number(G)
    info: dict = {"chi": chi, "coloring": list(cert.colors)}
    if config.family is not None:
        if chi <= 2:
            return True, info
        rec = recognize_bc_construction(G, config.family.p)
    else:
        if chi <= config.r:
            return True, info
        rec = recognize_g_construction(G, config.r)
    info["recognition"] = rec.to_dict()
    return rec.recognized, info


def search_counterexamples(config: SearchConfig) -> VerificationReport:
    """Run one seeded search and report every incumbent whose conclusion fails."""
    rng = random.Random(config.seed)
    n = config.n
    G = complete_bipartite(n // 2, n - n // 2)
    score = _proxy(G)
    best_score = score
    evaluated: set[frozenset] = set()
    failures: list[dict] = []
    best: dict | None = None
    accepted = 0
    lengths = config.lengths

    for it in range(config.iterations):
        temp = config.start_temperature + (config.end_temperature - config.start_temperature) * (
            it / max(config.iterations - 1, 1))
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        v += v >= u
        if G.has_edge(u, v):
            if not (config.floor_ok(G.degree(u) - 1) and config.floor_ok(G.degree(v) - 1)):
                continue
            H = G.with_edges(remove=[(u, v)])
        else:
            if _closes_forbidden_cycle(G, u, v, lengths):
                continue
            H = G.with_edges(add=[(u, v)])
        new_score = _proxy(H)
        if new_score < score and rng.random() >= math.exp((new_score - score) / temp):
            continue
        G, score = H, new_score
        accepted += 1
        if score < best_score or G.edges in evaluated:
            continue
        best_score = score
        evaluated.add(G.edges)
        try:
            holds, info = _conclusion(G, config)
        except BudgetExceeded:
            continue
        entry = {"iteration": it, "edges": [list(e) for e in G.sorted_edges()],
                 "min_degree": min(G.degree_sequence()), **info}
        if best is None or info["chi"] > best["chi"]:
            best = entry
        if not holds and len(failures) < config.max_logged:
            failures.append(entry)

    witnesses = {
        "seed": config.seed, "n": n, "iterations": config.iterations,
        "accepted_moves": accepted, "incumbents_evaluated": len(evaluated),
        "failures": failures, "best": best,
    }
    if config.iterations == 0 or not evaluated:
        return VerificationReport(f"search-{config.target}", {}, config.regime(),
                                  NOT_APPLICABLE, NOT_APPLICABLE, witnesses,
                                  ["no graph was evaluated"])
    return make_report(f"search-{config.target}", {}, config.regime(), not failures, witnesses)


def search_many(config: SearchConfig, seeds: list[int], workers: int = 1) -> list[VerificationReport]:
    """One search per seed; results come back in the order of ``seeds`` whatever ``workers`` is."""
    configs = [replace(config, seed=s) for s in seeds]
    if workers <= 1:
        return [search_counterexamples(c) for c in configs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(search_counterexamples, configs))


def merge_reports(reports: list[VerificationReport]) -> dict:
    """Single aggregate for several seeds; failures keep seed order."""
    failures = [dict(f, seed=r.witnesses["seed"]) for r in reports for f in r.witnesses["failures"]]
    return {
        "seeds": [r.witnesses["seed"] for r in reports],
        "conclusion": FAIL if failures else PASS,
        "failures": failures,
        "reports": [r.to_dict() for r in reports],
    }
