"""2k-cores and strong-2k-cores: certification, extension steps, extraction.

A vertex set ``H`` is a *2k-core* when every unordered pair of distinct
vertices of ``H`` is joined inside ``G[H]`` by a path with an even number of
vertices and at most ``2k`` vertices; it is a *strong* 2k-core when every
pair also has such a path with an odd number of vertices.

Two extension patterns grow a strong core ``H`` (with ``|H| <= 2k-2``) by a
path ``P`` outside it with ``|P| <= 2k - |H|``:

* ``single_anchor_even_path``: ``P`` has even order and both ends are
  adjacent to the same anchor ``x`` in ``H``;
* ``two_anchor_path``: the ends of ``P`` are adjacent to distinct anchors
  ``x != y`` (``two_anchor_single_vertex`` when ``P`` is one vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetExceeded, InputError
from .graph import Graph, as_vertex_set, induced_subgraph, is_bipartite, is_connected
from .parity import NodeCounter, PathWitness, find_path, odd_girth

SINGLE_ANCHOR = "single_anchor_even_path"
TWO_ANCHOR = "two_anchor_path"
TWO_ANCHOR_VERTEX = "two_anchor_single_vertex"
PATTERNS = (SINGLE_ANCHOR, TWO_ANCHOR, TWO_ANCHOR_VERTEX)

MAX_EXACT_VERTICES = 16


@dataclass(frozen=True)
class CoreCertificate:
    core: frozenset[int]
    k: int
    strong: bool
    # unordered pair (x, y) with x < y -> (even path, odd path or None)
    pair_witnesses: dict[tuple[int, int], tuple[PathWitness, PathWitness | None]]

    def is_valid(self, G: Graph) -> bool:
        """Re-check every witness independently of the search that produced it."""
        H = self.core
        if len(H) < 2 or any(not 0 <= v < G.n for v in H):
            return False
        if set(self.pair_witnesses) != set(combinations(sorted(H), 2)):
            return False
        for (x, y), (even, odd) in self.pair_witnesses.items():
            if not even.is_valid(G, x, y, "even", 2 * self.k, H):
                return False
            if self.strong and (odd is None or not odd.is_valid(G, x, y, "odd", 2 * self.k, H)):
                return False
        return True


@dataclass(frozen=True)
class ExtensionStep:
    pattern: str
    anchors: tuple[int, ...]
    path: PathWitness

    @property
    def order(self) -> int:
        return self.path.order

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "anchors": list(self.anchors),
                "path": list(self.path.vertices)}


# certification -------------------------------------------------------------

def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"k must be a positive integer (2k >= 2), got {k!r}")


def _certify(G: Graph, H: Iterable[int], k: int, strong: bool,
             counter: NodeCounter | None) -> CoreCertificate | None:
    _check_k(k)
    members = as_vertex_set(G, H)
    if len(members) < 2:
        raise InputError("a core needs at least two vertices")
    sub, back = induced_subgraph(G, members)
    if not _plausible(sub, strong):
        return None
    counter = counter or NodeCounter()
    bound = 2 * k
    witnesses: dict[tuple[int, int], list] = {}
    # adjacent pairs first: their odd paths close odd cycles and fail fastest
    pairs = sorted(combinations(range(sub.n), 2), key=lambda p: (not sub.has_edge(*p), p))
    for a, b in pairs:
        if sub.has_edge(a, b):
            even = PathWitness((a, b))
        else:
            out = find_path(sub, a, b, max_order=bound, parity="even", counter=counter)
            if out.exceeded:
                raise BudgetExceeded("core certification exceeded budget", nodes=counter.nodes)
            if not out.found:
                return None
            even = out.witness
        odd = None
        if strong:
            out = find_path(sub, a, b, max_order=bound, parity="odd", counter=counter)
            if out.exceeded:
                raise BudgetExceeded("core certification exceeded budget", nodes=counter.nodes)
            if not out.found:
                return None
            odd = out.witness
        witnesses[(back[a], back[b])] = [even, odd]
    relabel = {}
    for (x, y), (even, odd) in witnesses.items():
        relabel[(x, y)] = (
            PathWitness(tuple(back[i] for i in even.vertices)),
            None if odd is None else PathWitness(tuple(back[i] for i in odd.vertices)),
        )
    return CoreCertificate(members, k, strong, relabel)


def _plausible(sub: Graph, strong: bool) -> bool:
    # Necessary conditions only; the pair searches decide.
    if not is_connected(sub):
        return False
    if sub.n >= 3 and is_bipartite(sub).bipartite:
        return False  # two vertices on one side have no even path
    if strong and any(sub.degree(v) < 2 for v in sub.vertices()):
        return False  # a degree-1 vertex has no odd path to its neighbor
    return True


def certify_2k_core(G: Graph, H: Iterable[int], k: int, budget: int | None = None
                    ) -> CoreCertificate | None:
    """Certificate that ``H`` is a 2k-core of ``G``, or None."""
    return _certify(G, H, k, False, NodeCounter(budget))


def certify_strong_2k_core(G: Graph, H: Iterable[int], k: int, budget: int | None = None
                           ) -> CoreCertificate | None:
    """Certificate that ``H`` is a strong-2k-core of ``G``, or None."""
    return _certify(G, H, k, True, NodeCounter(budget))


# extension steps -------------------------------------------------------------

def iter_extensions(G: Graph, H: Iterable[int], k: int, budget: int | None = None,
                    counter: NodeCounter | None = None) -> Iterator[ExtensionStep]:
    """Every (endpoints, anchors, order) extension candidate that has a path, one path each.

    Order: increasing path order; within an order, two-anchor steps before
    single-anchor ones; then lowest endpoint ids.  Raises
    :class:`BudgetExceeded` if a path search runs out of nodes.
    """
    core = as_vertex_set(G, H)
    limit = 2 * k - len(core)
    if len(core) > 2 * k - 2:
        raise InputError(f"extension requires |H| <= 2k-2, got |H|={len(core)}, 2k={2 * k}")
    counter = counter or NodeCounter(budget)
    outside = [v for v in G.vertices() if v not in core]
    anchors = {v: sorted(G.neighbors(v) & core) for v in outside}
    touching = [v for v in outside if anchors[v]]
    allowed = outside

    def two_anchor(u: int, v: int) -> tuple[int, int] | None:
        for x in anchors[u]:
            for y in anchors[v]:
                if x != y:
                    return x, y
        return None

    for m in range(1, limit + 1):
        if m == 1:
            for u in touching:
                if len(anchors[u]) >= 2:
                    x, y = anchors[u][:2]
                    yield ExtensionStep(TWO_ANCHOR_VERTEX, (x, y), PathWitness((u,)))
            continue
        for u, v in combinations(touching, 2):
            xy = two_anchor(u, v)
            if xy is None:
                continue
            out = find_path(G, u, v, min_order=m, max_order=m, parity=m % 2,
                            allowed=allowed, counter=counter)
            if out.exceeded:
                raise BudgetExceeded("extension search exceeded budget", nodes=counter.nodes)
            if out.found:
                yield ExtensionStep(TWO_ANCHOR, xy, out.witness)
        if m % 2 == 0:
            for u, v in combinations(touching, 2):
                common = sorted(set(anchors[u]) & set(anchors[v]))
                if not common:
                    continue
                out = find_path(G, u, v, min_order=m, max_order=m, parity="even",
                                allowed=allowed, counter=counter)
                if out.exceeded:
                    raise BudgetExceeded("extension search exceeded budget", nodes=counter.nodes)
                if out.found:
                    yield ExtensionStep(SINGLE_ANCHOR, (common[0],), out.witness)


def find_extension(G: Graph, H: Iterable[int], k: int, budget: int | None = None,
                   check: bool = True) -> ExtensionStep | None:
    """The first extension step in search order, or None if neither pattern applies.

    ``H`` must be a certified strong-2k-core with ``|H| <= 2k-2`` (checked
    unless ``check`` is False).
    """
    core = as_vertex_set(G, H)
    if check and certify_strong_2k_core(G, core, k, budget) is None:
        raise InputError("H is not a strong-2k-core of G")
    return next(iter_extensions(G, core, k, budget), None)


def validate_extension(G: Graph, H: Iterable[int], step: ExtensionStep, k: int) -> None:
    """Raise :class:`InputError` unless ``step`` is a well-formed extension of ``H``."""
    core = as_vertex_set(G, H)
    path = step.path
    if step.pattern not in PATTERNS:
        raise InputError(f"unknown extension pattern {step.pattern!r}")
    if len(core) > 2 * k - 2:
        raise InputError("extension requires |H| <= 2k-2")
    if path.order > 2 * k - len(core):
        raise InputError(f"path order {path.order} exceeds 2k-|H| = {2 * k - len(core)}")
    if not path.is_valid(G) or any(v in core for v in path.vertices):
        raise InputError("extension path must be a simple path of G outside H")
    u, v = path.ends
    if any(a not in core for a in step.anchors):
        raise InputError("anchors must lie in H")
    if step.pattern == SINGLE_ANCHOR:
        if len(step.anchors) != 1 or path.order % 2:
            raise InputError("single-anchor steps need one anchor and an even path")
        (x,) = step.anchors
        if not (G.has_edge(x, u) and G.has_edge(x, v)):
            raise InputError("both path ends must be adjacent to the anchor")
    else:
        if len(step.anchors) != 2 or step.anchors[0] == step.anchors[1]:
            raise InputError("two-anchor steps need two distinct anchors")
        if (step.pattern == TWO_ANCHOR_VERTEX) != (path.order == 1):
            raise InputError("single-vertex steps must use the single-vertex pattern")
        x, y = step.anchors
        if not (G.has_edge(x, u) and G.has_edge(y, v)):
            raise InputError("path ends must be adjacent to their anchors")


def apply_extension(G: Graph, H: Iterable[int], step: ExtensionStep, k: int) -> frozenset[int]:
    """``H ∪ V(P)``; re-certified as a strong-2k-core when assertions are enabled."""
    validate_extension(G, H, step, k)
    grown = as_vertex_set(G, H) | frozenset(step.path.vertices)
    assert certify_strong_2k_core(G, grown, k) is not None, "extension broke the strong core"
    return grown


# extraction ------------------------------------------------------------------

def greedy_max_strong_core(G: Graph, k: int, budget: int | None = None
                           ) -> tuple[frozenset[int], list[ExtensionStep]]:
    """Seed with a shortest odd cycle, then apply extension steps until none applies.

    The result is maximal with respect to the two extension patterns, which
    is weaker than having maximum size.
    """
    _check_k(k)
    girth = odd_girth(G)
    if girth is None:
        raise InputError("no seed: G is bipartite")
    length, cycle = girth
    if length > 2 * k - 1:
        raise InputError(f"no seed: odd girth {length} exceeds 2k-1 = {2 * k - 1}")
    core = frozenset(cycle.vertices)
    assert certify_strong_2k_core(G, core, k, budget) is not None
    trace: list[ExtensionStep] = []
    while len(core) <= 2 * k - 2:
        step = find_extension(G, core, k, budget, check=False)
        if step is None:
            break
        core = apply_extension(G, core, step, k)
        trace.append(step)
    return core, trace


def _mask_connected(mask: int, adj: tuple[int, ...]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _mask_bipartite(mask: int, adj: tuple[int, ...]) -> bool:
    remaining = mask
    while remaining:
        start = remaining & -remaining
        sides = [start, 0]
        frontier, q = start, 0
        seen = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= mask
            if nxt & sides[q]:
                return False
            q ^= 1
            new = nxt & ~seen
            sides[q] |= new
            seen |= new
            frontier = new
        remaining &= ~seen
    return True


def iter_core_candidates(G: Graph, strong: bool, min_size: int = 2,
                         max_size: int | None = None) -> Iterator[frozenset[int]]:
    """Vertex sets passing the cheap necessary conditions, largest first."""
    adj = G.masks()
    top = G.n if max_size is None else min(max_size, G.n)
    for size in range(top, min_size - 1, -1):
        for combo in combinations(range(G.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if strong and any(bin(adj[v] & mask).count("1") < 2 for v in combo):
                continue
            if not _mask_connected(mask, adj):
                continue
            if size >= 3 and _mask_bipartite(mask, adj):
                continue
            yield frozenset(combo)


def iter_strong_cores(G: Graph, k: int, min_size: int = 3, max_size: int | None = None,
                      budget: int | None = None) -> Iterator[CoreCertificate]:
    """All strong-2k-cores with sizes in the given range, largest first (small graphs only)."""
    if G.n > MAX_EXACT_VERTICES:
        raise InputError(f"exhaustive core enumeration is limited to n <= {MAX_EXACT_VERTICES}")
    counter = NodeCounter(budget)
    for cand in iter_core_candidates(G, True, max(min_size, 2), max_size):
        cert = _certify(G, cand, k, True, counter)
        if cert is not None:
            yield cert


def exact_maximum_strong_core(G: Graph, k: int, budget: int | None = None) -> frozenset[int]:
    """A maximum-size strong-2k-core by subset enumeration (``n <= 16``); empty if none has >= 3 vertices."""
    _check_k(k)
    for cert in iter_strong_cores(G, k, 3, budget=budget):
        return cert.core
    return frozenset()


def exact_maximum_2k_core(G: Graph, k: int, budget: int | None = None) -> frozenset[int]:
    """A maximum-size 2k-core by subset enumeration (``n <= 16``); empty if ``G`` has no edge."""
    _check_k(k)
    if G.n > MAX_EXACT_VERTICES:
        raise InputError(f"exhaustive core enumeration is limited to n <= {MAX_EXACT_VERTICES}")
    counter = NodeCounter(budget)
    for cand in iter_core_candidates(G, False, 2):
        if _certify(G, cand, k, False, counter) is not None:
            return cand
    return frozenset()
