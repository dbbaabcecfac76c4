"""Generators for the named extremal graphs, with canonical vertex layouts.

Blob constructions (``g_construction``, ``bc_construction``) lay blob ``i``
out contiguously on ``[2t*i, 2t*(i+1))``: the first ``t`` ids form the side
containing the selected vertex ``2t*i``, the next ``t`` ids the opposite side.
Recognizers in :mod:`oddcore.verifier.recognize` map onto exactly this layout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import Edge, Graph, from_edge_list


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InputError("n must be non-negative")
    return from_edge_list(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("a path needs at least 1 vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise InputError("part sizes must be non-negative")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(sizes: list[int]) -> Graph:
    if any(s < 0 for s in sizes):
        raise InputError("part sizes must be non-negative")
    parts, start = [], 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = [(u, v) for P, Q in combinations(parts, 2) for u in P for v in Q]
    return from_edge_list(start, edges)


def turan_part_sizes(r: int, n: int) -> list[int]:
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(r: int, n: int) -> Graph:
    """``T_r(n)``: complete r-partite, part sizes as equal as possible (larger parts first)."""
    if r < 1 or r > n:
        raise InputError(f"Turán graph needs 1 <= r <= n, got r={r}, n={n}")
    return complete_multipartite(turan_part_sizes(r, n))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def wheel_graph(rim: int) -> Graph:
    """Hub ``0`` joined to a cycle on ``1..rim``."""
    if rim < 3:
        raise InputError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return from_edge_list(rim + 1, edges)


def _blobs(count: int, n: int) -> tuple[int, list[Edge], list[int]]:
    t = n // (2 * count)
    edges: list[Edge] = []
    selected = []
    for i in range(count):
        base = 2 * t * i
        selected.append(base)
        edges.extend((base + a, base + t + b) for a in range(t) for b in range(t))
    return t, edges, selected


def g_construction(r: int, n: int) -> tuple[Graph, list[int]]:
    """``G_{r+1}``: ``r+1`` blobs ``K_{t,t}`` (``t = n/(2r+2)``) whose selected vertices form ``K_{r+1}``.

    Returns the graph and the selected vertices (in blob order).
    """
    if r < 1:
        raise InputError("r must be at least 1")
    if n < 1 or n % (2 * (r + 1)):
        raise InputError(f"n={n} is not a positive multiple of 2(r+1)={2 * (r + 1)}")
    _, edges, selected = _blobs(r + 1, n)
    edges.extend(combinations(selected, 2))
    return from_edge_list(n, edges), selected


def bc_construction(p: int, n: int) -> tuple[Graph, list[int]]:
    """``BC_{2p+1}(n)``: ``2p+1`` blobs whose selected vertices form a cycle.

    Returns the graph and the selected vertices in cycle order.
    """
    if p < 1:
        raise InputError("p must be at least 1")
    m = 2 * p + 1
    if n < 1 or n % (2 * m):
        raise InputError(f"n={n} is not a positive multiple of 2(2p+1)={2 * m}")
    _, edges, selected = _blobs(m, n)
    edges.extend((selected[i], selected[(i + 1) % m]) for i in range(m))
    return from_edge_list(n, edges), selected


def cycle_blowup(m: int, t: int) -> Graph:
    """Balanced blow-up ``C_m(t)``; part ``i`` is ``[t*i, t*(i+1))``."""
    if m < 3 or t < 1:
        raise InputError("cycle blow-up needs m >= 3 and t >= 1")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges.extend((t * i + a, t * j + b) for a in range(t) for b in range(t))
    return from_edge_list(m * t, edges)


def t_star(r: int, n: int) -> Graph:
    """``T*(r, n)``: ``K_{⌊(n-r+1)/2⌋, ⌈(n-r+1)/2⌉}`` plus a ``K_r`` sharing one vertex.

    The bipartite part occupies ``0..n-r``; the suspension point is vertex 0
    and the other ``r-1`` clique vertices are ``n-r+1..n-1``.
    """
    if r < 1 or n < r:
        raise InputError(f"T*(r, n) needs n >= r >= 1, got r={r}, n={n}")
    base = n - r + 1
    a = base // 2
    edges = [(i, a + j) for i in range(a) for j in range(base - a)]
    clique = [0] + list(range(base, n))
    edges.extend(combinations(clique, 2))
    return from_edge_list(n, edges)


@dataclass(frozen=True)
class ConstructionSpec:
    """A named construction and its integer parameters, e.g. ``gplus:3,16``."""

    kind: str
    params: tuple[int, ...]

    KINDS = {
        "turan": 2, "gplus": 2, "bc": 2, "blowup": 2, "tstar": 2, "kab": 2,
        "complete": 1, "cycle": 1, "path": 1, "petersen": 0,
    }

    @classmethod
    def parse(cls, text: str) -> "ConstructionSpec":
        match = re.fullmatch(r"\s*([a-z]+)\s*(?::\s*([0-9 ,]*))?\s*", text)
        if not match:
            raise InputError(f"cannot parse construction spec {text!r}")
        kind, raw = match.group(1), match.group(2) or ""
        if kind not in cls.KINDS:
            raise InputError(f"unknown construction kind {kind!r}")
        params = tuple(int(x) for x in raw.replace(" ", "").split(",") if x)
        if len(params) != cls.KINDS[kind]:
            raise InputError(f"{kind} takes {cls.KINDS[kind]} parameters, got {len(params)}")
        return cls(kind, params)

    def build(self) -> Graph:
        a = self.params
        if self.kind == "turan":
            return turan_graph(*a)
        if self.kind == "gplus":
            return g_construction(*a)[0]
        if self.kind == "bc":
            return bc_construction(*a)[0]
        if self.kind == "blowup":
            return cycle_blowup(*a)
        if self.kind == "tstar":
            return t_star(*a)
        if self.kind == "kab":
            return complete_bipartite(*a)
        if self.kind == "complete":
            return complete_graph(*a)
        if self.kind == "cycle":
            return cycle_graph(*a)
        if self.kind == "path":
            return path_graph(*a)
        return petersen_graph()

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}" if self.params else self.kind


def build(spec: str) -> Graph:
    """Build a graph from a spec string such as ``bc:2,20`` or ``blowup:5,2``."""
    return ConstructionSpec.parse(spec).build()
