"""Exact finite-n chromatic profile by exhaustive labeled enumeration (n <= 8)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..coloring import is_k_colorable
from ..errors import BudgetExceeded, InputError
from ..graph import Graph, from_edge_list
from ..parity import NodeCounter, OddCycleFamily, _OutOfBudget

MAX_DELTA_CHI_VERTICES = 8


@dataclass(frozen=True)
class DeltaChiResult:
    """Best ``δ/n`` over family-free graphs on ``n`` vertices with ``χ > c``.

    ``value`` is None when no such graph exists.  ``witnesses`` holds one
    representative per isomorphism class attaining the optimum.
    """

    value: Fraction | None
    min_degree: int | None
    witnesses: tuple[Graph, ...]
    nodes: int

    def to_dict(self) -> dict:
        return {
            "value": None if self.value is None else f"{self.value.numerator}/{self.value.denominator}",
            "min_degree": self.min_degree,
            "witnesses": [[list(e) for e in g.sorted_edges()] for g in self.witnesses],
            "nodes": self.nodes,
        }


def _refined_classes(G: Graph) -> list[int]:
    # Colour refinement from degrees; colours are canonical integers.
    colors = [G.degree(v) for v in G.vertices()]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in G.neighbors(v)))) for v in G.vertices()]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_code(G: Graph) -> tuple[int, ...]:
    """Lexicographically greatest column-wise adjacency code over class-respecting orderings.

    Vertices are placed class by class (colour refinement order).  Placing a
    vertex fixes one whole column of the upper triangle, so only orderings
    whose prefix attains the best columns so far are kept.  Isomorphic graphs
    get equal codes.
    """
    n = G.n
    colors = _refined_classes(G)
    slots = sorted(colors)
    masks = G.masks()
    frontier: list[tuple[tuple[int, ...], int]] = [((), 0)]
    code: list[int] = []
    for pos in range(n):
        best = -1
        nxt: list[tuple[tuple[int, ...], int]] = []
        for order, used in frontier:
            for v in range(n):
                if used >> v & 1 or colors[v] != slots[pos]:
                    continue
                col = 0
                for u in order:
                    col = (col << 1) | (masks[u] >> v & 1)
                if col > best:
                    best, nxt = col, []
                if col == best:
                    nxt.append((order + (v,), used | 1 << v))
        code.append(best)
        frontier = nxt
    return tuple(code)


def _has_path_of_order(adj: list[int], src: int, dst: int, order: int) -> bool:
    # Simple path src..dst with exactly `order` vertices, on bitmask adjacency.
    def walk(v: int, used: int, count: int) -> bool:
        if count == order - 1:
            return bool(adj[v] >> dst & 1)
        cand = adj[v] & ~used & ~(1 << dst)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            if walk(w, used | low, count + 1):
                return True
            cand ^= low
        return False

    return walk(src, 1 << src, 1)


def _search(n: int, lengths: list[int], c: int, d: int, counter: NodeCounter,
            collect: bool) -> list[Graph]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    adj = [0] * n
    deg = [0] * n
    left = [n - 1] * n  # undecided pairs per vertex
    found: list[Graph] = []
    codes: set[tuple[int, ...]] = set()

    def creates_cycle(i: int, j: int) -> bool:
        return any(_has_path_of_order(adj, i, j, L) for L in lengths)

    def leaf() -> bool:
        G = from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1])
        out = is_k_colorable(G, c, counter=counter)
        if out.exceeded:
            raise _OutOfBudget
        if out.found:
            return False
        code = canonical_code(G)
        if code not in codes:
            codes.add(code)
            found.append(G)
        return True

    def step(idx: int) -> bool:
        counter.tick()
        if idx == len(pairs):
            return leaf() and not collect
        i, j = pairs[idx]
        left[i] -= 1
        left[j] -= 1
        done = False
        if not creates_cycle(i, j):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            deg[i] += 1
            deg[j] += 1
            done = step(idx + 1)
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
            deg[i] -= 1
            deg[j] -= 1
        if not done and deg[i] + left[i] >= d and deg[j] + left[j] >= d:
            done = step(idx + 1)
        left[i] += 1
        left[j] += 1
        return done

    step(0)
    return found


def exact_delta_chi(family: OddCycleFamily | list[int], c: int, n: int,
                    budget: int | None = None) -> DeltaChiResult:
    """Maximum ``δ(G)/n`` over ``family``-free ``G`` on ``n`` vertices with ``χ(G) > c``.

    Degree thresholds are tried from ``n-1`` down; for each, every labeled
    graph is built pair by pair, pruning when a vertex can no longer reach
    the threshold or when a new edge closes a forbidden cycle.  The first
    feasible threshold is the answer, and all its solutions are collected
    up to isomorphism.
    """
    family = family if isinstance(family, OddCycleFamily) else OddCycleFamily.of(family)
    if not 1 <= n <= MAX_DELTA_CHI_VERTICES:
        raise InputError(f"exact δ_χ enumeration needs 1 <= n <= {MAX_DELTA_CHI_VERTICES}")
    if c < 1:
        raise InputError("c must be at least 1")
    lengths = [L for L in family.sorted() if L <= n]
    counter = NodeCounter(budget)
    try:
        for d in range(n - 1, -1, -1):
            if _search(n, lengths, c, d, counter, collect=False):
                witnesses = _search(n, lengths, c, d, counter, collect=True)
                witnesses.sort(key=lambda g: (g.m, g.sorted_edges()))
                return DeltaChiResult(Fraction(d, n), d, tuple(witnesses), counter.nodes)
    except _OutOfBudget:
        raise BudgetExceeded("δ_χ enumeration exceeded budget", nodes=counter.nodes) from None
    return DeltaChiResult(None, None, (), counter.nodes)
