"""Immutable simple undirected graphs on vertices ``0..n-1``.

Every other module consumes :class:`Graph`.  Vertices are dense integer ids;
higher-level code works on relabeled induced subgraphs rather than masked
views, so the search kernels only ever test membership in small sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .errors import InputError

Edge = tuple[int, int]


class Graph:
    """Simple undirected graph with O(1) adjacency membership.

    Build one with :func:`from_edge_list` (or :meth:`Graph.from_edges`);
    instances are never mutated afterwards.
    """

    __slots__ = ("_n", "_adj", "_nbrs", "_edges", "_masks", "_blocks")

    def __init__(self, n: int, neighbor_sets: Iterable[Iterable[int]]):
        adj = tuple(frozenset(s) for s in neighbor_sets)
        if len(adj) != n:
            raise InputError(f"expected {n} neighbor sets, got {len(adj)}")
        self._n = n
        self._adj = adj
        self._nbrs: tuple[tuple[int, ...], ...] | None = None
        self._edges: frozenset[Edge] | None = None
        self._masks: tuple[int, ...] | None = None
        self._blocks: tuple[frozenset[int], ...] | None = None

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Edge]) -> "Graph":
        return from_edge_list(n, pairs)

    # basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in increasing id order (fixed iteration order)."""
        if self._nbrs is None:
            self._nbrs = tuple(tuple(sorted(s)) for s in self._adj)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def edges(self) -> frozenset[Edge]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u in range(self._n) for v in self._adj[u] if u < v
            )
        return self._edges

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``w`` set iff ``w`` adjacent)."""
        if self._masks is None:
            out = []
            for s in self._adj:
                mask = 0
                for w in s:
                    mask |= 1 << w
                out.append(mask)
            self._masks = tuple(out)
        return self._masks

    def neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """``N(S)``: union of the neighborhoods of ``vertices``."""
        out: set[int] = set()
        for v in vertices:
            out |= self._adj[v]
        return out

    def degree_sequence(self) -> list[int]:
        return [len(s) for s in self._adj]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    # derived graphs ----------------------------------------------------

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> "Graph":
        """A new graph with ``add`` inserted and ``remove`` deleted."""
        sets = [set(s) for s in self._adj]
        for u, v in remove:
            sets[u].discard(v)
            sets[v].discard(u)
        for u, v in add:
            _check_pair(self._n, u, v)
            sets[u].add(v)
            sets[v].add(u)
        return Graph(self._n, sets)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise InputError("relabeling must be a permutation of 0..n-1")
        sets: list[set[int]] = [set() for _ in range(self._n)]
        for v in range(self._n):
            sets[perm[v]] = {perm[w] for w in self._adj[v]}
        return Graph(self._n, sets)

    # block structure (cached) ------------------------------------------

    def blocks(self) -> tuple[frozenset[int], ...]:
        """Vertex sets of the biconnected components that contain an edge."""
        if self._blocks is None:
            self._blocks = tuple(_biconnected_components(self))
        return self._blocks


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise InputError(f"self-loop at vertex {u}")


def from_edge_list(n: int, pairs: Iterable[Edge]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse, loops are rejected."""
    if n < 0:
        raise InputError("vertex count must be non-negative")
    sets: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = pair
        _check_pair(n, u, v)
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, sets)


def empty_graph(n: int) -> Graph:
    return Graph(n, [() for _ in range(n)])


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex ids interpreted against some graph."""

    members: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(frozenset(vertices))

    def check(self, G: Graph) -> None:
        for v in self.members:
            if not 0 <= v < G.n:
                raise InputError(f"vertex {v} is not in V(G) = 0..{G.n - 1}")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


def as_vertex_set(G: Graph, S: Iterable[int] | VertexSet) -> frozenset[int]:
    members = S.members if isinstance(S, VertexSet) else frozenset(S)
    for v in members:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InputError(f"vertex {v!r} is not in V(G) = 0..{G.n - 1}")
    return members


# primitive queries ------------------------------------------------------

def min_degree(G: Graph) -> int:
    """Minimum degree ``δ(G)``."""
    if G.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(G.degree(v) for v in G.vertices())


def induced_subgraph(G: Graph, S: Iterable[int] | VertexSet) -> tuple[Graph, list[int]]:
    """``G[S]`` relabeled to ``0..|S|-1``.

    Returns the subgraph and the map ``new id -> old id`` (sorted order of S).
    """
    members = sorted(as_vertex_set(G, S))
    index = {v: i for i, v in enumerate(members)}
    sets = [[index[w] for w in G.neighbors(v) if w in index] for v in members]
    return Graph(len(members), sets), members


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G - S`` relabeled, plus the ``new id -> old id`` map."""
    drop = as_vertex_set(G, S)
    return induced_subgraph(G, [v for v in G.vertices() if v not in drop])


def connected_components(G: Graph, allowed: Iterable[int] | None = None) -> list[list[int]]:
    """Components (each sorted) of ``G`` or of ``G[allowed]``, ordered by smallest vertex."""
    alive = set(G.vertices()) if allowed is None else set(allowed)
    seen: set[int] = set()
    comps = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def is_cut_vertex(G: Graph, v: int) -> bool:
    """True iff ``G - v`` is disconnected.  ``G`` must be connected."""
    if not 0 <= v < G.n:
        raise InputError(f"vertex {v} is not in V(G)")
    if not is_connected(G):
        raise InputError("is_cut_vertex requires a connected graph")
    if G.n <= 2:
        return False
    start = 0 if v != 0 else 1
    seen = {v, start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in G.neighbors(x):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) < G.n


def articulation_points(G: Graph) -> set[int]:
    """All cut vertices, component by component."""
    points: set[int] = set()
    _dfs_lowpoint(G, points, None)
    return points


def _biconnected_components(G: Graph) -> list[frozenset[int]]:
    blocks: list[frozenset[int]] = []
    _dfs_lowpoint(G, set(), blocks)
    return blocks


def _dfs_lowpoint(G: Graph, points: set[int], blocks: list[frozenset[int]] | None) -> None:
    # Iterative Hopcroft-Tarjan; edge stack yields blocks when requested.
    n = G.n
    disc = [-1] * n
    low = [0] * n
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(G.sorted_neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(G.sorted_neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append((v, w))
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    points.add(parent)
                if blocks is not None:
                    block: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        block.add(a)
                        block.add(b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(block))
        if root_children >= 2:
            points.add(root)


# bipartiteness ----------------------------------------------------------

@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of :func:`is_bipartite`: exactly one certificate is set."""

    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None

    @property
    def bipartite(self) -> bool:
        return self.coloring is not None

    def __bool__(self) -> bool:
        return self.bipartite

    def parts(self) -> tuple[list[int], list[int]]:
        if self.coloring is None:
            raise InputError("graph is not bipartite")
        return ([v for v, c in enumerate(self.coloring) if c == 0],
                [v for v, c in enumerate(self.coloring) if c == 1])


def is_bipartite(G: Graph, allowed: Iterable[int] | None = None) -> BipartiteCheck:
    """2-color ``G`` (or ``G[allowed]``) by BFS, or return a simple odd cycle.

    With ``allowed`` the coloring covers all of ``V(G)``; vertices outside
    ``allowed`` get color 0 and are ignored.
    """
    alive = None if allowed is None else set(allowed)
    color = [-1] * G.n
    parent = [-1] * G.n
    depth = [0] * G.n
    for s in G.vertices():
        if color[s] != -1 or (alive is not None and s not in alive):
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.sorted_neighbors(v):
                if alive is not None and w not in alive:
                    continue
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteCheck(None, _tree_cycle(v, w, parent, depth))
    return BipartiteCheck(tuple(max(c, 0) for c in color), None)


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # Same-color edge uw closes a simple odd cycle through the BFS tree paths.
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def is_proper_two_coloring(G: Graph, coloring: Iterable[int]) -> bool:
    col = list(coloring)
    return len(col) == G.n and all(col[u] != col[v] for u, v in G.edges)


# edge-list text format --------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` (``#`` comments)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise InputError("edge list is empty (missing 'n m' header)")
    (n, m), pairs = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise InputError("header values must be non-negative")
    if len(pairs) != m:
        raise InputError(f"header announces {m} edges but {len(pairs)} were given")
    return from_edge_list(n, pairs)


def read_edge_list(stream: TextIO) -> Graph:
    return parse_edge_list(stream.read())


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


def write_edge_list(G: Graph, stream: TextIO) -> None:
    stream.write(format_edge_list(G))
