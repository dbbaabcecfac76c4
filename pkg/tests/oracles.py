"""Slow, obviously-correct reference implementations used to freeze expected values.

Nothing here shares code with the package beyond the ``Graph`` accessors.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from oddcore.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def simple_paths(G: Graph, u: int, v: int, max_order: int, allowed=None):
    """Every simple u-v path with at most ``max_order`` vertices, by plain DFS."""
    ok = set(range(G.n)) if allowed is None else set(allowed)
    path = [u]

    def dfs(x):
        if x == v:
            yield tuple(path)
            return
        if len(path) == max_order:
            return
        for w in sorted(G.neighbors(x)):
            if w in ok and w not in path:
                path.append(w)
                yield from dfs(w)
                path.pop()

    if u in ok and v in ok:
        yield from dfs(u)


def path_orders(G: Graph, u: int, v: int, max_order: int, allowed=None) -> set[int]:
    return {len(p) for p in simple_paths(G, u, v, max_order, allowed)}


def cycle_lengths(G: Graph) -> set[int]:
    """Lengths of all simple cycles (networkx enumeration)."""
    return {len(c) for c in nx.simple_cycles(to_nx(G))}


def odd_girth(G: Graph) -> int | None:
    odd = [L for L in cycle_lengths(G) if L % 2]
    return min(odd) if odd else None


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def chromatic_number(G: Graph) -> int:
    """Fewest blocks over all partitions of V into independent sets (Bell-number enumeration)."""
    if G.n == 0:
        return 0
    best = G.n
    for part in _set_partitions(list(range(G.n))):
        if len(part) < best and all(not G.has_edge(a, b) for block in part
                                    for a, b in combinations(block, 2)):
            best = len(part)
    return best


def _bipartite_after(G: Graph, gone_vertices=(), gone_edges=()) -> bool:
    H = to_nx(G)
    H.remove_edges_from(gone_edges)
    H.remove_nodes_from(gone_vertices)
    return nx.is_bipartite(H)


def d2(G: Graph) -> int:
    for size in range(G.n + 1):
        if any(_bipartite_after(G, S) for S in combinations(range(G.n), size)):
            return size
    raise AssertionError


def gamma2(G: Graph) -> int:
    """``e - maxcut`` by trying all 2^(n-1) cuts."""
    if G.n == 0:
        return 0
    best = 0
    for mask in range(1 << (G.n - 1)):
        cut = sum(1 for u, v in G.edges if (mask >> u & 1) != (mask >> v & 1))
        best = max(best, cut)
    return G.m - best


def is_strong_core(G: Graph, H, k: int, strong: bool = True) -> bool:
    """Definition check by path enumeration inside ``G[H]``."""
    H = sorted(H)
    for x, y in combinations(H, 2):
        orders = path_orders(G, x, y, 2 * k, H)
        if not any(o % 2 == 0 for o in orders):
            return False
        if strong and not any(o % 2 == 1 for o in orders):
            return False
    return len(H) >= 2


def max_core_size(G: Graph, k: int, strong: bool = True, min_size: int = 3) -> int:
    """Largest core by brute force over vertex subsets (small n only)."""
    for size in range(G.n, min_size - 1, -1):
        for S in combinations(range(G.n), size):
            if nx.is_connected(to_nx(G).subgraph(S)) and is_strong_core(G, S, k, strong):
                return size
    return 0


def max_delta_over_n(lengths, c: int, n: int):
    """Brute force over networkx's atlas (all graphs up to 7 vertices) for the finite-n profile."""
    from fractions import Fraction

    best = None
    for A in nx.graph_atlas_g():
        if A.number_of_nodes() != n:
            continue
        if any(len(cyc) in lengths for cyc in nx.simple_cycles(A)):
            continue
        G = Graph(n, [set(A.neighbors(v)) for v in range(n)])
        if chromatic_number(G) <= c:
            continue
        value = Fraction(min(d for _, d in A.degree()), n)
        if best is None or value > best:
            best = value
    return best
