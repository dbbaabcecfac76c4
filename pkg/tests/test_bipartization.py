from math import comb

import pytest
from hypothesis import given, settings

import oracles
from oddcore.bipartization import (MAX_D2_VERTICES, MAX_GAMMA2_VERTICES, d2, gamma2,
                                   gamma2_by_edge_branching, max_cut)
from oddcore.constructions import (complete_bipartite, complete_graph, cycle_blowup, cycle_graph,
                                   petersen_graph, t_star)
from oddcore.errors import BudgetExceeded, InputError
from oddcore.graph import empty_graph
from strategies import graphs


@pytest.mark.parametrize("G,vertices,edges", [
    (cycle_graph(5), 1, 1), (complete_graph(4), 2, 2), (complete_graph(5), 3, 4),
    (complete_bipartite(3, 4), 0, 0), (petersen_graph(), 3, 3), (empty_graph(4), 0, 0),
])
def test_small_values(G, vertices, edges):
    v = d2(G)
    e = gamma2(G)
    assert (v.size, e.size) == (vertices, edges)
    assert v.is_valid(G) and e.is_valid(G)
    assert gamma2_by_edge_branching(G).size == edges


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_d2_matches_subset_oracle(G):
    res = d2(G)
    assert res.size == oracles.d2(G)
    assert res.is_valid(G) and len(res.removed) == res.size


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_gamma2_matches_cut_oracle(G):
    res = gamma2(G)
    assert res.size == oracles.gamma2(G)
    assert res.is_valid(G)
    value, side = max_cut(G)
    assert value == G.m - res.size
    assert value == sum(1 for u, v in G.edges if side[u] != side[v])


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_edge_branching_agrees_with_max_cut(G):
    assert gamma2_by_edge_branching(G).size == gamma2(G).size


@pytest.mark.parametrize("r", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [12, 16, 20])
def test_t_star_values(r, n):
    # The clique part dominates: removing r-2 clique vertices other than the shared
    # one leaves K_2 hanging off a bipartite graph.
    G = t_star(r, n)
    assert d2(G).size == r - 2 == oracles.d2(t_star(r, r + 2))
    assert gamma2(G).size == comb((r + 1) // 2, 2) + comb(r // 2, 2)


def test_size_limits_and_budget():
    with pytest.raises(InputError):
        d2(empty_graph(MAX_D2_VERTICES + 1))
    with pytest.raises(InputError):
        gamma2(empty_graph(MAX_GAMMA2_VERTICES + 1))
    with pytest.raises(BudgetExceeded) as info:
        d2(cycle_blowup(5, 3), budget=2)
    assert info.value.upper is not None
