"""Odd cycles, fixed-length cycles and parity-constrained bounded-order paths.

Orders always count vertices: an *even path* has an even number of vertices
(an odd number of edges).  Exhaustive searches share one depth-first kernel
that prunes a partial path as soon as the shortest walk of the required
edge parity back to the target no longer fits in the remaining order.
Those walk distances come from a breadth-first search in the parity-lifted
graph (vertex ``v`` split into ``(v, even)`` and ``(v, odd)``), restricted to
the allowed vertices; a walk lower-bounds any path, so pruning is admissible.
"""

from __future__ import annotations

import os
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph, as_vertex_set, is_bipartite

DEFAULT_BUDGET = 10**8
INF = 1 << 60

FOUND = "found"
ABSENT = "absent"
BUDGET_EXCEEDED = "budget_exceeded"


def default_budget() -> int:
    """Node budget for exact searches; ``ODDCORE_BUDGET`` overrides the default."""
    raw = os.environ.get("ODDCORE_BUDGET")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"ODDCORE_BUDGET must be an integer, got {raw!r}") from None
        if value < 1:
            raise InputError("ODDCORE_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


def parse_parity(parity: str | int) -> int:
    """Map ``"even"``/``"odd"`` (or 0/1) to the vertex-count parity bit."""
    if parity in ("even", 0):
        return 0
    if parity in ("odd", 1):
        return 1
    raise InputError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> str:
        return "even" if self.order % 2 == 0 else "odd"

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def is_valid(self, G: Graph, u: int | None = None, v: int | None = None,
                 parity: str | int | None = None, max_order: int | None = None,
                 allowed: Iterable[int] | None = None) -> bool:
        """Independent check: simple, consecutive vertices adjacent, constraints met."""
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= x < G.n for x in vs):
            return False
        if any(not G.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if u is not None and vs[0] != u:
            return False
        if v is not None and vs[-1] != v:
            return False
        if parity is not None and self.order % 2 != parse_parity(parity):
            return False
        if max_order is not None and self.order > max_order:
            return False
        if allowed is not None:
            ok = set(allowed)
            if any(x not in ok for x in vs):
                return False
        return True


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid(self, G: Graph, length: int | None = None) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= x < G.n for x in vs):
            return False
        if any(not G.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))):
            return False
        return length is None or len(vs) == length


@dataclass(frozen=True)
class OddCycleFamily:
    """A finite set of forbidden odd cycle lengths.

    ``p``: ``C_{2p+1}`` is the shortest odd cycle *not* in the family.
    ``k``: ``C_{2k+1}`` is the longest cycle in the family.
    """

    lengths: frozenset[int]

    def __post_init__(self) -> None:
        if not self.lengths:
            raise InputError("an odd cycle family must not be empty")
        for L in self.lengths:
            if not isinstance(L, int) or L < 3 or L % 2 == 0:
                raise InputError(f"family lengths must be odd integers >= 3, got {L!r}")

    @classmethod
    def of(cls, lengths: Iterable[int]) -> "OddCycleFamily":
        return cls(frozenset(lengths))

    @classmethod
    def parse(cls, text: str) -> "OddCycleFamily":
        try:
            return cls.of(int(x) for x in text.split(",") if x.strip())
        except ValueError:
            raise InputError(f"cannot parse cycle lengths {text!r}") from None

    @property
    def p(self) -> int:
        L = 3
        while L in self.lengths:
            L += 2
        return (L - 1) // 2

    @property
    def k(self) -> int:
        return (max(self.lengths) - 1) // 2

    def sorted(self) -> list[int]:
        return sorted(self.lengths)


@dataclass
class SearchOutcome:
    status: str
    witness: PathWitness | CycleWitness | None = None
    nodes: int = 0
    violated_length: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def absent(self) -> bool:
        return self.status == ABSENT

    @property
    def exceeded(self) -> bool:
        return self.status == BUDGET_EXCEEDED


class _OutOfBudget(Exception):
    pass


class NodeCounter:
    """Shared node budget for one or more searches."""

    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None = None):
        self.nodes = 0
        self.limit = default_budget() if limit is None else limit

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _OutOfBudget


def lifted_distances(G: Graph, source: int, allowed: Sequence[int] | bytearray | None = None
                     ) -> tuple[list[int], list[int]]:
    """Shortest walk lengths from ``source`` split by edge-count parity.

    Returns ``(even, odd)`` lists; ``even[v]`` is the length of the shortest
    walk ``source -> v`` with an even number of edges inside the allowed
    vertices (``allowed`` is a 0/1 indicator indexed by vertex).
    """
    n = G.n
    dist = ([INF] * n, [INF] * n)
    dist[0][source] = 0
    queue = deque([(source, 0)])
    while queue:
        v, q = queue.popleft()
        d = dist[q][v] + 1
        nq = q ^ 1
        target = dist[nq]
        for w in G.sorted_neighbors(v):
            if (allowed is None or allowed[w]) and target[w] == INF:
                target[w] = d
                queue.append((w, nq))
    return dist


# paths --------------------------------------------------------------------

def _path_kernel(G: Graph, src: int, dst: int, lo: int, hi: int, parity: int | None,
                 ok: bytearray, counter: NodeCounter) -> tuple[int, ...] | None:
    if hi < 2:
        return None
    d_even, d_odd = lifted_distances(G, dst, ok)
    dists = (d_even, d_odd)
    nbrs = [G.sorted_neighbors(v) for v in range(G.n)] if G.n <= 4096 else None
    on_path = bytearray(G.n)
    on_path[src] = 1
    path = [src]

    def nb(v: int) -> tuple[int, ...]:
        return nbrs[v] if nbrs is not None else G.sorted_neighbors(v)

    def extend(w: int, c: int) -> bool:
        counter.tick()
        c2 = c + 1
        for x in nb(w):
            if not ok[x] or on_path[x]:
                continue
            if x == dst:
                if lo <= c2 <= hi and (parity is None or c2 % 2 == parity):
                    path.append(x)
                    return True
                continue
            if parity is None:
                need = min(d_even[x], d_odd[x])
            else:
                need = dists[(parity - c2) % 2][x]
            if c2 + need > hi:
                continue
            on_path[x] = 1
            path.append(x)
            if extend(x, c2):
                return True
            path.pop()
            on_path[x] = 0
        return False

    # start pruning: is dst reachable from src with the right parity at all?
    if parity is None:
        start_need = min(d_even[src], d_odd[src])
    else:
        start_need = dists[(parity - 1) % 2][src]
    if 1 + start_need > hi:
        return None
    limit = sys.getrecursionlimit()
    if hi + 100 > limit:
        sys.setrecursionlimit(hi + 100)
    return tuple(path) if extend(src, 1) else None


def find_path(G: Graph, u: int, v: int, *, max_order: int, min_order: int = 2,
              parity: str | int | None = None, forbidden: Iterable[int] = (),
              allowed: Iterable[int] | None = None, budget: int | None = None,
              counter: NodeCounter | None = None) -> SearchOutcome:
    """Exhaustive search for a simple ``u``-``v`` path with order in ``[min_order, max_order]``.

    ``parity`` constrains the vertex count; ``forbidden`` vertices are avoided
    and, if ``allowed`` is given, the path stays inside it.
    """
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise InputError("path endpoints must be vertices of G")
    if u == v:
        raise InputError("path endpoints must be distinct (u = v is handled by callers)")
    bad = as_vertex_set(G, forbidden)
    if u in bad or v in bad:
        raise InputError("path endpoints must not be forbidden")
    par = None if parity is None else parse_parity(parity)
    ok = bytearray(G.n) if allowed is not None else bytearray(b"\x01") * G.n
    if allowed is not None:
        for x in as_vertex_set(G, allowed):
            ok[x] = 1
        if not (ok[u] and ok[v]):
            raise InputError("path endpoints must lie in the allowed set")
    for x in bad:
        ok[x] = 0
    counter = counter or NodeCounter(budget)
    start = counter.nodes
    try:
        path = _path_kernel(G, u, v, max(min_order, 2), max_order, par, ok, counter)
    except _OutOfBudget:
        return SearchOutcome(BUDGET_EXCEEDED, nodes=counter.nodes - start)
    if path is None:
        return SearchOutcome(ABSENT, nodes=counter.nodes - start)
    return SearchOutcome(FOUND, PathWitness(path), nodes=counter.nodes - start)


def parity_path_exists(G: Graph, u: int, v: int, parity: str | int, max_order: int,
                       forbidden: Iterable[int] = (), budget: int | None = None) -> SearchOutcome:
    """Is there a simple ``u``-``v`` path of the given vertex-count parity and order ``<= max_order``
    avoiding ``forbidden``?"""
    return find_path(G, u, v, max_order=max_order, parity=parity,
                     forbidden=forbidden, budget=budget)


# cycles -------------------------------------------------------------------

def _block_is_bipartite(G: Graph, block: frozenset[int]) -> bool:
    return is_bipartite(G, block).bipartite


def contains_cycle_of_length(G: Graph, L: int, budget: int | None = None,
                             counter: NodeCounter | None = None) -> SearchOutcome:
    """Exact search for a cycle with exactly ``L`` vertices.

    Every cycle lies inside one biconnected block, so blocks smaller than
    ``L`` (and bipartite blocks when ``L`` is odd) are skipped.  Within a
    block each vertex is tried as the cycle's minimum vertex, and each cycle
    is traversed in one direction only.
    """
    if L < 3:
        raise InputError(f"cycle length must be at least 3, got {L}")
    counter = counter or NodeCounter(budget)
    start = counter.nodes
    try:
        for block in G.blocks():
            if len(block) < L:
                continue
            if L % 2 == 1 and _block_is_bipartite(G, block):
                continue
            cycle = _cycle_in_block(G, block, L, counter)
            if cycle is not None:
                return SearchOutcome(FOUND, CycleWitness(cycle), nodes=counter.nodes - start)
    except _OutOfBudget:
        return SearchOutcome(BUDGET_EXCEEDED, nodes=counter.nodes - start)
    return SearchOutcome(ABSENT, nodes=counter.nodes - start)


def _cycle_in_block(G: Graph, block: frozenset[int], L: int,
                    counter: NodeCounter) -> tuple[int, ...] | None:
    members = sorted(block)
    if L + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(L + 100)
    for idx, s in enumerate(members):
        if len(members) - idx < L:
            return None
        ok = bytearray(G.n)
        for x in members[idx:]:
            ok[x] = 1
        dists = lifted_distances(G, s, ok)
        on_path = bytearray(G.n)
        on_path[s] = 1
        path = [s]
        anchor_nbrs = G.neighbors(s)

        def extend(w: int, c: int) -> bool:
            counter.tick()
            if c == L:
                return w in anchor_nbrs and path[1] < w
            c2 = c + 1
            back = L - c2 + 1  # edges still needed to return to the anchor
            table = dists[back % 2]
            for x in G.sorted_neighbors(w):
                if not ok[x] or on_path[x] or table[x] > back:
                    continue
                on_path[x] = 1
                path.append(x)
                if extend(x, c2):
                    return True
                path.pop()
                on_path[x] = 0
            return False

        if extend(s, 1):
            return tuple(path)
    return None


def is_family_free(G: Graph, F: OddCycleFamily | Iterable[int],
                   budget: int | None = None) -> SearchOutcome:
    """``absent`` means G is F-free; ``found`` names the violated length and its cycle."""
    family = F if isinstance(F, OddCycleFamily) else OddCycleFamily.of(F)
    counter = NodeCounter(budget)
    for L in family.sorted():
        out = contains_cycle_of_length(G, L, counter=counter)
        if out.found:
            return SearchOutcome(FOUND, out.witness, nodes=counter.nodes, violated_length=L)
        if out.exceeded:
            return SearchOutcome(BUDGET_EXCEEDED, nodes=counter.nodes, violated_length=None,
                                 extra={"length": L})
    return SearchOutcome(ABSENT, nodes=counter.nodes)


# odd girth ------------------------------------------------------------------

def odd_girth(G: Graph) -> tuple[int, CycleWitness] | None:
    """Shortest odd cycle length and a witness, or None iff G is bipartite.

    Per block, a breadth-first search in the parity-lifted graph from each
    vertex ``s`` finds the shortest odd closed walk through ``s``; the global
    minimum over ``s`` is the odd girth.
    """
    best: tuple[int, tuple[int, ...]] | None = None
    for block in G.blocks():
        if len(block) < 3 or _block_is_bipartite(G, block):
            continue
        ok = bytearray(G.n)
        for x in block:
            ok[x] = 1
        for s in sorted(block):
            bound = INF if best is None else best[0]
            walk = _shortest_odd_closed_walk(G, s, ok, bound)
            if walk is not None and (best is None or len(walk) < best[0]):
                best = (len(walk), walk)
                if best[0] == 3:
                    break
        if best is not None and best[0] == 3:
            break
    if best is None:
        return None
    cycle = shorten_odd_closed_walk(best[1])
    return len(cycle), CycleWitness(cycle)


def _shortest_odd_closed_walk(G: Graph, s: int, ok: bytearray, bound: int) -> tuple[int, ...] | None:
    n = G.n
    dist = ([INF] * n, [INF] * n)
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    dist[0][s] = 0
    queue = deque([(s, 0)])
    while queue:
        v, q = queue.popleft()
        d = dist[q][v] + 1
        if d >= bound:
            return None
        nq = q ^ 1
        for w in G.sorted_neighbors(v):
            if ok[w] and dist[nq][w] == INF:
                dist[nq][w] = d
                parent[(w, nq)] = (v, q)
                if w == s and nq == 1:
                    walk = []
                    state = (v, q)
                    while state != (s, 0):
                        walk.append(state[0])
                        state = parent[state]
                    walk.append(s)
                    return tuple(reversed(walk))
                queue.append((w, nq))
    return None


def shorten_odd_closed_walk(walk: Sequence[int]) -> tuple[int, ...]:
    """Reduce an odd closed walk (cyclic vertex sequence) to a simple odd cycle."""
    walk = list(walk)
    if len(walk) % 2 == 0:
        raise InputError("walk length must be odd")
    while True:
        seen: dict[int, int] = {}
        split = None
        for j, v in enumerate(walk):
            if v in seen:
                split = (seen[v], j)
                break
            seen[v] = j
        if split is None:
            return tuple(walk)
        i, j = split
        inner = walk[i:j]
        outer = walk[:i] + walk[j:]
        walk = inner if len(inner) % 2 == 1 else outer
