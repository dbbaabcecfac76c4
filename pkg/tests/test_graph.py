import io

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddcore.errors import InputError
from oddcore.graph import (Graph, VertexSet, articulation_points, as_vertex_set,
                           connected_components, delete_vertices, empty_graph, format_edge_list,
                           from_edge_list, induced_subgraph, is_bipartite, is_connected,
                           is_cut_vertex, is_proper_two_coloring, min_degree, parse_edge_list,
                           read_edge_list, write_edge_list)
from oracles import to_nx
from strategies import graphs


def test_edge_list_round_trip():
    G = from_edge_list(5, [(0, 1), (3, 1), (2, 4)])
    text = format_edge_list(G)
    assert text.splitlines()[0] == "5 3"
    assert parse_edge_list(text) == G
    buf = io.StringIO()
    write_edge_list(G, buf)
    buf.seek(0)
    assert read_edge_list(buf) == G


def test_comments_and_blank_lines_are_skipped():
    G = parse_edge_list("# a triangle\n3 3\n\n0 1\n1 2 \n# closing edge\n0 2\n")
    assert G.m == 3 and G.degree_sequence() == [2, 2, 2]


@pytest.mark.parametrize("text", [
    "", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "-1 0\n",
])
def test_malformed_edge_lists_raise(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_duplicate_edges_collapse():
    G = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


def test_min_degree_of_empty_graph_raises():
    with pytest.raises(InputError):
        min_degree(empty_graph(0))
    assert min_degree(empty_graph(3)) == 0


def test_induced_subgraph_keeps_back_map():
    G = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    sub, back = induced_subgraph(G, [4, 0, 1])
    assert back == [0, 1, 4]
    assert {tuple(sorted((back[a], back[b]))) for a, b in sub.edges} == {(0, 1), (0, 4)}
    rest, keep = delete_vertices(G, [2])
    assert keep == [0, 1, 3, 4] and rest.m == 3


def test_vertex_set_validation():
    G = empty_graph(3)
    assert as_vertex_set(G, VertexSet.of([2, 0])) == frozenset({0, 2})
    with pytest.raises(InputError):
        as_vertex_set(G, [5])


def test_cut_vertex_requires_connected_input():
    G = from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError):
        is_cut_vertex(G, 0)
    P = from_edge_list(3, [(0, 1), (1, 2)])
    assert is_cut_vertex(P, 1) and not is_cut_vertex(P, 0)


def test_bipartite_certificates():
    C6 = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
    check = is_bipartite(C6)
    assert check and is_proper_two_coloring(C6, check.coloring)
    C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    check = is_bipartite(C5)
    assert not check and len(check.odd_cycle) == 5
    with pytest.raises(InputError):
        check.parts()


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_components_and_cut_vertices_match_networkx(G):
    H = to_nx(G)
    ours = sorted(sorted(c) for c in connected_components(G))
    theirs = sorted(sorted(c) for c in nx.connected_components(H))
    assert ours == theirs
    assert is_connected(G) == nx.is_connected(H)
    assert articulation_points(G) == set(nx.articulation_points(H))
    blocks = {b for b in G.blocks()}
    expected = {frozenset(c) for c in nx.biconnected_components(H)}
    assert blocks == expected


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_bipartite_check_matches_networkx(G):
    check = is_bipartite(G)
    assert check.bipartite == nx.is_bipartite(to_nx(G))
    if check.bipartite:
        assert is_proper_two_coloring(G, check.coloring)
    else:
        cyc = check.odd_cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


@settings(max_examples=50, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_is_an_isomorphism(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = G.relabel(perm)
    assert H.m == G.m and sorted(H.degree_sequence()) == sorted(G.degree_sequence())
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges)


def test_relabel_rejects_non_permutation():
    with pytest.raises(InputError):
        empty_graph(3).relabel([0, 0, 1])


def test_with_edges_and_equality():
    G = from_edge_list(3, [(0, 1)])
    H = G.with_edges(add=[(1, 2)], remove=[(0, 1)])
    assert H == from_edge_list(3, [(1, 2)]) and hash(H) == hash(from_edge_list(3, [(2, 1)]))
    assert G != H and isinstance(G, Graph)
