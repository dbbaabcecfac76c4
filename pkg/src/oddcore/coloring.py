"""Exact k-colorability and chromatic number with checkable certificates."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError
from .graph import Graph
from .parity import ABSENT, BUDGET_EXCEEDED, FOUND, NodeCounter, SearchOutcome, _OutOfBudget


@dataclass(frozen=True)
class ColoringCertificate:
    colors: tuple[int, ...]
    c: int

    def is_proper(self, G: Graph) -> bool:
        cols = self.colors
        if len(cols) != G.n or any(not 0 <= x < self.c for x in cols):
            return False
        return all(cols[u] != cols[v] for u, v in G.edges)

    def uses_all_colors(self) -> bool:
        return len(set(self.colors)) == self.c

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.c)]
        for v, col in enumerate(self.colors):
            out[col].append(v)
        return out


def greedy_clique(G: Graph) -> list[int]:
    """A large clique found greedily from every start vertex (a χ lower bound)."""
    best: list[int] = []
    order = sorted(G.vertices(), key=lambda v: (-G.degree(v), v))
    for s in order:
        if G.degree(s) + 1 <= len(best):
            break
        clique = [s]
        cand = set(G.neighbors(s))
        while cand:
            w = max(cand, key=lambda x: (len(G.neighbors(x) & cand), -x))
            clique.append(w)
            cand &= G.neighbors(w)
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def dsatur_greedy(G: Graph) -> ColoringCertificate:
    """One pass of DSATUR without backtracking (a χ upper bound)."""
    n = G.n
    colors = [-1] * n
    used = 0
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((x for x in range(n) if colors[x] < 0),
                key=lambda x: (len(seen[x]), G.degree(x), -x))
        col = 0
        while col in seen[v]:
            col += 1
        colors[v] = col
        used = max(used, col + 1)
        for w in G.neighbors(v):
            seen[w].add(col)
    return ColoringCertificate(tuple(colors), used)


def is_k_colorable(G: Graph, c: int, budget: int | None = None,
                   counter: NodeCounter | None = None) -> SearchOutcome:
    """Backtracking search for a proper ``c``-coloring.

    Vertices are branched in DSATUR order (saturation, then degree, then
    lowest id); a vertex may only open color ``max used + 1``, which removes
    color-permutation symmetry.  ``absent`` is an exhaustive proof.
    """
    if c < 1:
        raise InputError(f"number of colors must be at least 1, got {c}")
    counter = counter or NodeCounter(budget)
    start = counter.nodes
    n = G.n
    if n == 0:
        return SearchOutcome(FOUND, ColoringCertificate((), c), nodes=0)
    nbrs = [G.sorted_neighbors(v) for v in range(n)]
    deg = [len(x) for x in nbrs]
    colors = [-1] * n
    # count[v][col] = number of colored neighbors of v with color col
    count = [[0] * c for _ in range(n)]
    sat = [0] * n
    if n + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(n + 100)

    def pick() -> int:
        best, key = -1, (-1, -1)
        for x in range(n):
            if colors[x] < 0:
                k = (sat[x], deg[x])
                if k > key:
                    best, key = x, k
        return best

    def assign(v: int, col: int, delta: int) -> None:
        for w in nbrs[v]:
            row = count[w]
            if delta > 0:
                if row[col] == 0:
                    sat[w] += 1
                row[col] += 1
            else:
                row[col] -= 1
                if row[col] == 0:
                    sat[w] -= 1

    def solve(done: int, max_used: int) -> bool:
        counter.tick()
        if done == n:
            return True
        v = pick()
        row = count[v]
        for col in range(min(max_used + 1, c - 1) + 1):
            if row[col]:
                continue
            colors[v] = col
            assign(v, col, 1)
            if solve(done + 1, max(max_used, col)):
                return True
            assign(v, col, -1)
            colors[v] = -1
        return False

    try:
        ok = solve(0, -1)
    except _OutOfBudget:
        return SearchOutcome(BUDGET_EXCEEDED, nodes=counter.nodes - start)
    if not ok:
        return SearchOutcome(ABSENT, nodes=counter.nodes - start)
    return SearchOutcome(FOUND, ColoringCertificate(tuple(colors), c), nodes=counter.nodes - start)


def chromatic_number(G: Graph, budget: int | None = None) -> tuple[int, ColoringCertificate]:
    """Least ``c`` with a proper ``c``-coloring, plus a coloring using all ``c`` colors.

    Raises :class:`BudgetExceeded` with the bracketing interval if some level
    of the search runs out of nodes.
    """
    if G.n == 0:
        return 0, ColoringCertificate((), 0)
    lower = max(len(greedy_clique(G)), 1)
    upper_cert = dsatur_greedy(G)
    upper = upper_cert.c
    counter = NodeCounter(budget)
    for c in range(lower, upper):
        out = is_k_colorable(G, c, counter=counter)
        if out.found:
            return c, out.witness
        if out.exceeded:
            raise BudgetExceeded(f"chromatic number search exceeded budget at c={c}",
                                 nodes=counter.nodes, lower=c, upper=upper)
    return upper, upper_cert


def is_r_partite(G: Graph, r: int, budget: int | None = None) -> tuple[bool, list[list[int]] | None]:
    """Partition into ``r`` independent sets (some possibly empty), or ``(False, None)``."""
    out = is_k_colorable(G, r, budget)
    if out.exceeded:
        raise BudgetExceeded(f"{r}-colorability search exceeded budget", nodes=out.nodes)
    if out.absent:
        return False, None
    return True, out.witness.classes()
