from collections import deque

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from oddcore.constructions import (bc_construction, complete_graph, cycle_blowup, cycle_graph,
                                   g_construction, path_graph, petersen_graph)
from oddcore.errors import InputError
from oddcore.graph import from_edge_list
from oddcore.parity import (INF, CycleWitness, OddCycleFamily, PathWitness, contains_cycle_of_length,
                            default_budget, find_path, is_family_free, lifted_distances, odd_girth,
                            parity_path_exists, parse_parity, shorten_odd_closed_walk)
from strategies import graphs


# paths --------------------------------------------------------------------

def test_c5_parity_paths():
    C5 = cycle_graph(5)
    even = parity_path_exists(C5, 0, 1, "even", 2)
    assert even.found and even.witness.vertices == (0, 1)
    odd = parity_path_exists(C5, 0, 1, "odd", 5)
    assert odd.found and odd.witness.order == 5
    assert parity_path_exists(C5, 0, 1, "odd", 4).absent
    assert parity_path_exists(C5, 0, 2, "odd", 3).found
    assert parity_path_exists(C5, 0, 2, "even", 4).found


def test_forbidden_vertices_block_paths():
    C5 = cycle_graph(5)
    assert parity_path_exists(C5, 0, 2, "even", 5, forbidden=[4]).absent
    with pytest.raises(InputError):
        find_path(C5, 0, 2, max_order=5, forbidden=[0])


def test_endpoint_errors():
    G = path_graph(3)
    with pytest.raises(InputError):
        find_path(G, 1, 1, max_order=3)
    with pytest.raises(InputError):
        find_path(G, 0, 9, max_order=3)
    with pytest.raises(InputError):
        find_path(G, 0, 2, max_order=3, allowed=[0, 1])
    with pytest.raises(InputError):
        parse_parity("sideways")


def test_exact_order_window():
    K5 = complete_graph(5)
    for m in range(2, 6):
        out = find_path(K5, 0, 1, min_order=m, max_order=m)
        assert out.found and out.witness.order == m


def test_path_witness_validation():
    C5 = cycle_graph(5)
    assert PathWitness((0, 1, 2)).is_valid(C5, 0, 2, "odd", 3)
    assert not PathWitness((0, 2)).is_valid(C5)
    assert not PathWitness((0, 1, 0)).is_valid(C5)
    assert not PathWitness((0, 1, 2)).is_valid(C5, parity="even")
    assert not PathWitness((0, 1, 2)).is_valid(C5, allowed=[0, 1])


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=2, max_n=9), st.data())
def test_find_path_matches_enumeration(G, data):
    u = data.draw(st.integers(0, G.n - 1))
    v = data.draw(st.integers(0, G.n - 1).filter(lambda x: x != u))
    lo = data.draw(st.integers(2, 9))
    hi = data.draw(st.integers(2, 9))
    parity = data.draw(st.sampled_from([None, "even", "odd"]))
    others = [x for x in range(G.n) if x not in (u, v)]
    forbidden = data.draw(st.lists(st.sampled_from(others), unique=True, max_size=2) if others
                          else st.just([]))
    allowed = [x for x in range(G.n) if x not in forbidden]
    orders = oracles.path_orders(G, u, v, hi, allowed)
    want = {o for o in orders if o >= lo and (parity is None or o % 2 == parse_parity(parity))}
    out = find_path(G, u, v, min_order=lo, max_order=hi, parity=parity, forbidden=forbidden)
    assert out.found == bool(want)
    if out.found:
        assert out.witness.is_valid(G, u, v, parity, hi, allowed)
        assert out.witness.order >= lo


def test_budget_exhaustion_is_distinct_from_absence():
    G = cycle_blowup(7, 3)
    out = find_path(G, 0, 1, min_order=21, max_order=21, budget=10)
    assert out.exceeded and not out.absent and not out.found


def test_env_budget_override(monkeypatch):
    monkeypatch.setenv("ODDCORE_BUDGET", "1234")
    assert default_budget() == 1234
    monkeypatch.setenv("ODDCORE_BUDGET", "lots")
    with pytest.raises(InputError):
        default_budget()
    monkeypatch.delenv("ODDCORE_BUDGET")
    assert default_budget() == 10**8


# lifted distances -------------------------------------------------------------

def _double_cover_distances(G, s):
    dist = {(s, 0): 0}
    queue = deque([(s, 0)])
    while queue:
        v, q = queue.popleft()
        for w in G.neighbors(v):
            if (w, 1 - q) not in dist:
                dist[(w, 1 - q)] = dist[(v, q)] + 1
                queue.append((w, 1 - q))
    return dist


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_lifted_distances_match_double_cover(G):
    even, odd = lifted_distances(G, 0)
    ref = _double_cover_distances(G, 0)
    for v in range(G.n):
        assert even[v] == ref.get((v, 0), INF)
        assert odd[v] == ref.get((v, 1), INF)


# cycles -------------------------------------------------------------------

@settings(max_examples=120, deadline=None)
@given(graphs(max_n=9))
def test_cycle_lengths_match_enumeration(G):
    lengths = oracles.cycle_lengths(G)
    for L in range(3, G.n + 1):
        out = contains_cycle_of_length(G, L)
        assert out.found == (L in lengths)
        if out.found:
            assert out.witness.is_valid(G, L)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10))
def test_odd_girth_matches_enumeration(G):
    found = odd_girth(G)
    expected = oracles.odd_girth(G)
    if expected is None:
        assert found is None
    else:
        length, cycle = found
        assert length == expected and cycle.is_valid(G, length)


def test_cycle_length_examples():
    P = petersen_graph()
    assert odd_girth(P)[0] == 5
    assert not contains_cycle_of_length(P, 3).found
    assert contains_cycle_of_length(P, 9).found
    assert contains_cycle_of_length(cycle_blowup(5, 2), 7).found
    with pytest.raises(InputError):
        contains_cycle_of_length(P, 2)


@pytest.mark.parametrize("r,n", [(2, 12), (3, 16), (4, 30)])
def test_g_construction_has_no_long_odd_cycle(r, n):
    G, _ = g_construction(r, n)
    first_odd = r + 2 if r % 2 else r + 3
    assert all(contains_cycle_of_length(G, L).absent for L in range(first_odd, n + 1, 2))
    assert contains_cycle_of_length(G, r + 1 if r % 2 == 0 else r).found


def test_family_freeness():
    G, _ = bc_construction(2, 20)
    out = is_family_free(G, OddCycleFamily.of([3, 5, 7]))
    assert out.found and out.violated_length == 5
    assert is_family_free(G, [3, 7, 9, 11]).absent


def test_family_parameters():
    F = OddCycleFamily.parse("5, 7,9,11")
    assert (F.p, F.k) == (1, 5)
    assert OddCycleFamily.of([3, 5, 9]).p == 3
    for bad in ([], [4], [1], [3, 6]):
        with pytest.raises(InputError):
            OddCycleFamily.of(bad)
    with pytest.raises(InputError):
        OddCycleFamily.parse("3,x")


def test_shorten_odd_closed_walk():
    # a closed walk of length 7 that revisits vertex 0; the odd part is a triangle
    walk = (0, 1, 2, 0, 3, 4, 5)
    cyc = shorten_odd_closed_walk(walk)
    assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)


def test_cycle_witness_validation():
    C5 = cycle_graph(5)
    assert CycleWitness((0, 1, 2, 3, 4)).is_valid(C5, 5)
    assert not CycleWitness((0, 1, 2)).is_valid(C5)


def test_networkx_cross_check_on_blowup():
    G = cycle_blowup(7, 2)
    lengths = {len(c) for c in nx.simple_cycles(oracles.to_nx(G), length_bound=9)}
    for L in range(3, 10):
        assert contains_cycle_of_length(G, L).found == (L in lengths)


def test_disconnected_graph_paths():
    G = from_edge_list(4, [(0, 1), (2, 3)])
    assert find_path(G, 0, 3, max_order=4).absent
