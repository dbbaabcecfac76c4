"""Exact d2 (vertex bipartization) and gamma2 (edge bipartization) at small scale.

Both problems are NP-hard; these solvers are oracles for fixtures, not
scalable tools.  ``d2`` branches on the vertices of a shortest odd cycle
under iterative deepening.  ``gamma2`` is ``e(G) - maxcut(G)`` with an exact
max-cut branch and bound; :func:`gamma2_by_edge_branching` recomputes it
independently by branching on the edges of shortest odd cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError
from .graph import Edge, Graph, is_bipartite
from .parity import INF, NodeCounter, _OutOfBudget, shorten_odd_closed_walk

MAX_D2_VERTICES = 64
MAX_GAMMA2_VERTICES = 40


@dataclass(frozen=True)
class BipartizationResult:
    kind: str  # "vertex" or "edge"
    removed: tuple
    size: int
    residual_coloring: dict[int, int]
    nodes: int = 0

    def is_valid(self, G: Graph) -> bool:
        """Removing ``removed`` leaves a graph that ``residual_coloring`` properly 2-colors."""
        col = self.residual_coloring
        if self.kind == "vertex":
            gone = set(self.removed)
            if set(col) != set(G.vertices()) - gone:
                return False
            return all(col[u] != col[v] for u, v in G.edges if u not in gone and v not in gone)
        gone_edges = {tuple(sorted(e)) for e in self.removed}
        if not gone_edges <= G.edges or set(col) != set(G.vertices()):
            return False
        return all(col[u] != col[v] for u, v in G.edges if (u, v) not in gone_edges)


def _shortest_odd_cycle(G: Graph, alive: bytearray, dead_edges: set[Edge] | None = None
                        ) -> tuple[int, ...] | None:
    # Lifted BFS from every live vertex; returns a simple shortest odd cycle.
    best: tuple[int, ...] | None = None
    n = G.n
    for s in range(n):
        if not alive[s]:
            continue
        bound = INF if best is None else len(best)
        dist = ([INF] * n, [INF] * n)
        parent: dict[tuple[int, int], tuple[int, int]] = {}
        dist[0][s] = 0
        queue = deque([(s, 0)])
        found = None
        while queue and found is None:
            v, q = queue.popleft()
            d = dist[q][v] + 1
            if d >= bound:
                break
            nq = q ^ 1
            for w in G.sorted_neighbors(v):
                if not alive[w] or dist[nq][w] != INF:
                    continue
                if dead_edges and ((v, w) if v < w else (w, v)) in dead_edges:
                    continue
                dist[nq][w] = d
                parent[(w, nq)] = (v, q)
                if w == s and nq == 1:
                    walk, state = [], (v, q)
                    while state != (s, 0):
                        walk.append(state[0])
                        state = parent[state]
                    walk.append(s)
                    found = tuple(reversed(walk))
                    break
                queue.append((w, nq))
        if found is not None:
            best = shorten_odd_closed_walk(found)
            if len(best) == 3:
                break
    return best


def _residual_coloring(G: Graph, keep: list[int], dead_edges: set[Edge] | None = None) -> dict[int, int]:
    if dead_edges:
        H = G.with_edges(remove=dead_edges)
        check = is_bipartite(H, keep)
    else:
        check = is_bipartite(G, keep)
    assert check.bipartite, "residual graph must be bipartite"
    return {v: check.coloring[v] for v in keep}


def _greedy_vertex_transversal(G: Graph) -> list[int]:
    alive = bytearray(b"\x01") * G.n
    removed = []
    while True:
        cyc = _shortest_odd_cycle(G, alive)
        if cyc is None:
            return removed
        v = max(cyc, key=lambda x: (sum(alive[w] for w in G.neighbors(x)), -x))
        alive[v] = 0
        removed.append(v)


def d2(G: Graph, budget: int | None = None) -> BipartizationResult:
    """Minimum number of vertices whose deletion leaves a bipartite graph.

    Iterative deepening on the transversal size; at each node the search
    branches on the deletable vertices of a shortest odd cycle of the
    remaining graph, marking earlier branch choices undeletable so no set is
    explored twice.  Raises :class:`BudgetExceeded` with bounds.
    """
    if G.n > MAX_D2_VERTICES:
        raise InputError(f"d2 is exact only up to {MAX_D2_VERTICES} vertices")
    upper_set = _greedy_vertex_transversal(G)
    counter = NodeCounter(budget)
    alive = bytearray(b"\x01") * G.n
    keep_fixed = bytearray(G.n)
    chosen: list[int] = []

    def search(s: int) -> bool:
        counter.tick()
        cyc = _shortest_odd_cycle(G, alive)
        if cyc is None:
            return True
        if s == 0:
            return False
        options = [v for v in cyc if not keep_fixed[v]]
        marked = []
        ok = False
        for v in options:
            alive[v] = 0
            chosen.append(v)
            if search(s - 1):
                ok = True
                break
            chosen.pop()
            alive[v] = 1
            keep_fixed[v] = 1
            marked.append(v)
        for v in marked:
            keep_fixed[v] = 0
        return ok

    size = 0
    try:
        for size in range(0, len(upper_set) + 1):
            if search(size):
                removed = tuple(sorted(chosen))
                keep = [v for v in G.vertices() if alive[v]]
                return BipartizationResult("vertex", removed, len(removed),
                                           _residual_coloring(G, keep), counter.nodes)
    except _OutOfBudget:
        raise BudgetExceeded("d2 search exceeded budget", nodes=counter.nodes,
                             lower=size, upper=len(upper_set)) from None
    raise AssertionError("greedy transversal size is always feasible")


# max cut / gamma2 ------------------------------------------------------------

def _vertex_order(G: Graph) -> list[int]:
    order: list[int] = []
    seen = set()
    for s in sorted(G.vertices(), key=lambda v: (-G.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(G.neighbors(v), key=lambda x: (-G.degree(x), x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _local_search_cut(G: Graph) -> list[int]:
    side = [0] * G.n
    for v in _vertex_order(G):
        same = sum(1 for w in G.neighbors(v) if side[w] == 0)
        side[v] = 1 if same > G.degree(v) - same else 0
    improved = True
    while improved:
        improved = False
        for v in G.vertices():
            same = sum(1 for w in G.neighbors(v) if side[w] == side[v])
            if 2 * same > G.degree(v):
                side[v] ^= 1
                improved = True
    return side


def _cut_value(G: Graph, side: list[int]) -> int:
    return sum(1 for u, v in G.edges if side[u] != side[v])


def max_cut(G: Graph, budget: int | None = None) -> tuple[int, list[int]]:
    """Exact maximum cut by branch and bound; returns ``(value, side per vertex)``.

    Vertices are placed in BFS order.  The bound adds, for each unplaced
    vertex, the larger of its edge counts to the two sides, plus every edge
    between unplaced vertices.
    """
    if G.n > MAX_GAMMA2_VERTICES:
        raise InputError(f"max cut is exact only up to {MAX_GAMMA2_VERTICES} vertices")
    n = G.n
    best_side = _local_search_cut(G)
    best = _cut_value(G, best_side)
    if n == 0 or best == G.m:
        return best, best_side
    order = _vertex_order(G)
    side = [-1] * n
    to_side = [[0, 0] for _ in range(n)]
    counter = NodeCounter(budget)
    state = {"best": best, "side": best_side}

    def bound(i: int, cut: int, free_edges: int) -> int:
        extra = 0
        for j in range(i, n):
            a = to_side[order[j]]
            extra += a[0] if a[0] > a[1] else a[1]
        return cut + extra + free_edges

    def place(i: int, cut: int, free_edges: int) -> None:
        counter.tick()
        if i == n:
            if cut > state["best"]:
                state["best"] = cut
                state["side"] = side[:]
            return
        if bound(i, cut, free_edges) <= state["best"]:
            return
        v = order[i]
        a = to_side[v]
        unplaced = [w for w in G.neighbors(v) if side[w] < 0]
        choices = (0,) if i == 0 else ((1, 0) if a[0] >= a[1] else (0, 1))
        for s in choices:
            side[v] = s
            for w in unplaced:
                to_side[w][s] += 1
            place(i + 1, cut + a[1 - s], free_edges - len(unplaced))
            for w in unplaced:
                to_side[w][s] -= 1
            side[v] = -1

    try:
        place(0, 0, G.m)
    except _OutOfBudget:
        raise BudgetExceeded("max cut search exceeded budget", nodes=counter.nodes,
                             lower=state["best"], upper=G.m) from None
    return state["best"], state["side"]


def gamma2(G: Graph, budget: int | None = None) -> BipartizationResult:
    """Minimum number of edges whose deletion leaves a bipartite graph (``e - maxcut``)."""
    if G.n > MAX_GAMMA2_VERTICES:
        raise InputError(f"gamma2 is exact only up to {MAX_GAMMA2_VERTICES} vertices")
    try:
        value, side = max_cut(G, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded("gamma2 search exceeded budget", nodes=exc.nodes,
                             lower=G.m - exc.upper, upper=G.m - exc.lower) from None
    removed = tuple(sorted((u, v) for u, v in G.edges if side[u] == side[v]))
    return BipartizationResult("edge", removed, G.m - value,
                               {v: side[v] for v in G.vertices()})


def gamma2_by_edge_branching(G: Graph, budget: int | None = None) -> BipartizationResult:
    """gamma2 by iterative deepening over edges of shortest odd cycles (independent of max cut)."""
    counter = NodeCounter(budget)
    alive = bytearray(b"\x01") * G.n
    dead: set[Edge] = set()
    fixed: set[Edge] = set()

    def search(s: int) -> bool:
        counter.tick()
        cyc = _shortest_odd_cycle(G, alive, dead)
        if cyc is None:
            return True
        if s == 0:
            return False
        edges = [tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))]
        marked = []
        ok = False
        for e in edges:
            if e in fixed:
                continue
            dead.add(e)
            if search(s - 1):
                ok = True
                break
            dead.discard(e)
            fixed.add(e)
            marked.append(e)
        for e in marked:
            fixed.discard(e)
        return ok

    size = 0
    try:
        for size in range(0, G.m + 1):
            if search(size):
                removed = tuple(sorted(dead))
                return BipartizationResult("edge", removed, len(removed),
                                           _residual_coloring(G, list(G.vertices()), dead),
                                           counter.nodes)
    except _OutOfBudget:
        raise BudgetExceeded("gamma2 edge branching exceeded budget", nodes=counter.nodes,
                             lower=size, upper=None) from None
    raise AssertionError("deleting every edge is always feasible")

