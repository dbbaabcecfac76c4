"""Named small fixtures and seeded random graphs shared by tests, demos and the CLI matrix."""

from __future__ import annotations

import random
from itertools import combinations

from .constructions import (bc_construction, complete_bipartite, complete_graph, cycle_blowup,
                            cycle_graph, g_construction, path_graph, petersen_graph, star_graph,
                            t_star, turan_graph, wheel_graph)
from .graph import Graph, from_edge_list


def small_fixtures() -> dict[str, Graph]:
    """Hand-picked graphs up to 12 vertices, keyed by construction spec or a short name."""
    out = {
        "path:2": path_graph(2),
        "path:5": path_graph(5),
        "star:4": star_graph(4),
        "cycle:3": cycle_graph(3),
        "cycle:4": cycle_graph(4),
        "cycle:5": cycle_graph(5),
        "cycle:7": cycle_graph(7),
        "cycle:9": cycle_graph(9),
        "complete:4": complete_graph(4),
        "complete:5": complete_graph(5),
        "complete:6": complete_graph(6),
        "kab:3,3": complete_bipartite(3, 3),
        "kab:2,5": complete_bipartite(2, 5),
        "turan:3,9": turan_graph(3, 9),
        "petersen": petersen_graph(),
        "wheel:5": wheel_graph(5),
        "wheel:6": wheel_graph(6),
        "blowup:5,2": cycle_blowup(5, 2),
        "blowup:7,1": cycle_blowup(7, 1),
        "gplus:2,6": g_construction(2, 6)[0],
        "gplus:2,12": g_construction(2, 12)[0],
        "gplus:3,8": g_construction(3, 8)[0],
        "bc:1,6": bc_construction(1, 6)[0],
        "bc:1,12": bc_construction(1, 12)[0],
        "bc:2,10": bc_construction(2, 10)[0],
        "tstar:3,8": t_star(3, 8),
        "tstar:4,10": t_star(4, 10),
        "two-triangles": from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
        "theta": from_edge_list(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (0, 5), (5, 3)]),
    }
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) drawn with ``rng``."""
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """A random spanning tree (random attachment) plus G(n, p) edges: always connected."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges.update(e for e in combinations(range(n), 2) if rng.random() < p)
    return from_edge_list(n, edges)


def seeded_connected_graphs(count: int, seed: int, n_range: tuple[int, int] = (3, 11),
                            p_range: tuple[float, float] = (0.1, 0.6)) -> list[Graph]:
    """``count`` random connected graphs, reproducible from ``seed``."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(*n_range)
        p = rng.uniform(*p_range)
        graphs.append(random_connected_graph(n, p, rng))
    return graphs


def g_fixture_params(max_n: int = 60, rs: tuple[int, ...] = (2, 3, 4, 5)) -> list[tuple[int, int]]:
    """Every ``(r, n)`` with ``2(r+1) | n`` and ``n <= max_n``."""
    return [(r, n) for r in rs for n in range(2 * (r + 1), max_n + 1, 2 * (r + 1))]


def bc_fixture_params(max_n: int = 60, ps: tuple[int, ...] = (1, 2, 3)) -> list[tuple[int, int]]:
    """Every ``(p, n)`` with ``2(2p+1) | n`` and ``n <= max_n``."""
    return [(p, n) for p in ps for n in range(2 * (2 * p + 1), max_n + 1, 2 * (2 * p + 1))]
