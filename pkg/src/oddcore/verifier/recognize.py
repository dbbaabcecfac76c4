"""Structural recognition of the clique-of-blobs and cycle-of-blobs extremal graphs.

Recognition does not search over labelings.  The selected vertices must be
exactly the cut vertices; each one hangs a balanced complete bipartite blob.
From that decomposition an explicit vertex map onto the generator's layout is
written down and then confirmed by comparing edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..constructions import bc_construction, g_construction
from ..graph import Graph, articulation_points, connected_components, is_bipartite


@dataclass(frozen=True)
class Recognition:
    recognized: bool
    mapping: tuple[int, ...] | None = None  # vertex v of G -> mapping[v] in the canonical graph
    reason: str = ""
    selected: tuple[int, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.recognized

    def to_dict(self) -> dict:
        return {"recognized": self.recognized,
                "mapping": None if self.mapping is None else list(self.mapping),
                "selected": list(self.selected), "reason": self.reason}


def _no(reason: str) -> Recognition:
    return Recognition(False, None, reason)


def _decompose(G: Graph, blobs: int) -> tuple[list[int], dict[int, list[int]]] | str:
    # Returns (cut vertices, blob vertices hanging off each) or a failure reason.
    n = G.n
    if n == 0 or n % (2 * blobs):
        return f"n={n} is not a positive multiple of {2 * blobs}"
    t = n // (2 * blobs)
    Q = sorted(articulation_points(G))
    if len(Q) != blobs:
        return f"expected {blobs} cut vertices, found {len(Q)}"
    qset = set(Q)
    rest = [v for v in G.vertices() if v not in qset]
    hanging: dict[int, list[int]] = {q: [] for q in Q}
    for comp in connected_components(G, rest):
        attach = G.neighborhood(comp) & qset
        if len(attach) != 1:
            return "a component of G - Q attaches to more than one cut vertex"
        hanging[attach.pop()].extend(comp)
    for q, comp in hanging.items():
        if len(comp) != 2 * t - 1:
            return f"blob at cut vertex {q} has {len(comp) + 1} vertices, expected {2 * t}"
    return Q, hanging


def _blob_map(G: Graph, q: int, comp: list[int], base: int, t: int,
              mapping: list[int]) -> str | None:
    blob = [q] + sorted(comp)
    check = is_bipartite(G, blob)
    if not check.bipartite:
        return f"blob at {q} is not bipartite"
    own = sorted(v for v in comp if check.coloring[v] == check.coloring[q])
    other = sorted(v for v in comp if check.coloring[v] != check.coloring[q])
    if len(own) != t - 1 or len(other) != t:
        return f"blob at {q} is not balanced"
    mapping[q] = base
    for i, v in enumerate(own, start=1):
        mapping[v] = base + i
    for i, v in enumerate(other):
        mapping[v] = base + t + i
    return None


def _finish(G: Graph, order: list[int], hanging: dict[int, list[int]],
            canonical: Graph) -> Recognition:
    t = G.n // (2 * len(order))
    mapping = [-1] * G.n
    for i, q in enumerate(order):
        reason = _blob_map(G, q, hanging[q], 2 * t * i, t, mapping)
        if reason:
            return _no(reason)
    if G.relabel(mapping) != canonical:
        return _no("edge sets differ from the canonical layout under the derived map")
    return Recognition(True, tuple(mapping), "isomorphic via explicit map", tuple(order))


def recognize_g_construction(G: Graph, r: int) -> Recognition:
    """Is ``G`` isomorphic to ``G_{r+1}`` on ``n`` vertices?  Returns the map when it is."""
    if r < 1:
        return _no("r must be positive")
    dec = _decompose(G, r + 1)
    if isinstance(dec, str):
        return _no(dec)
    Q, hanging = dec
    if any(not G.has_edge(a, b) for i, a in enumerate(Q) for b in Q[i + 1:]):
        return _no("cut vertices do not form a clique")
    canonical, _ = g_construction(r, G.n)
    return _finish(G, Q, hanging, canonical)


def recognize_bc_construction(G: Graph, p: int) -> Recognition:
    """Is ``G`` isomorphic to ``BC_{2p+1}(n)``?  Returns the map when it is."""
    if p < 1:
        return _no("p must be positive")
    m = 2 * p + 1
    dec = _decompose(G, m)
    if isinstance(dec, str):
        return _no(dec)
    Q, hanging = dec
    qset = set(Q)
    if any(len(G.neighbors(q) & qset) != 2 for q in Q):
        return _no("cut vertices do not induce a cycle")
    order = [Q[0]]
    prev = None
    while len(order) < m:
        nxt = min(w for w in G.neighbors(order[-1]) & qset if w != prev)
        if nxt == order[0]:
            return _no("cut vertices induce several cycles")
        prev = order[-1]
        order.append(nxt)
    canonical, _ = bc_construction(p, G.n)
    return _finish(G, order, hanging, canonical)
