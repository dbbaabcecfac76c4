import random

import pytest

from oddcore.constructions import (bc_construction, complete_bipartite, complete_graph,
                                   cycle_blowup, cycle_graph, g_construction, turan_graph)
from oddcore.corpus import bc_fixture_params, g_fixture_params
from oddcore.errors import InputError
from oddcore.graph import from_edge_list
from oddcore.parity import OddCycleFamily, PathWitness
from oddcore.verifier import (BELOW_REGIME, FAIL, IN_REGIME, NOT_APPLICABLE, PASS, FamilyParams,
                              NeighborhoodLayers, TheoremParams, check_common_neighborhood_bound,
                              check_core_size_bounds, check_shortest_odd_cycle_bound,
                              check_structure_lemma, check_theorem_main, check_theorem_main2,
                              recognize_bc_construction, recognize_g_construction)


def outcome(report):
    return report.conclusion, report.tier, report.witnesses.get("raw_conclusion")


# parameters ------------------------------------------------------------------

def test_theorem_params():
    assert TheoremParams(2, 5).f == 5 and TheoremParams(3, 13).f == 13
    p = TheoremParams(3, 13)
    assert p.n_threshold() == 108 * 4**3 * 13
    assert p.regime_checks(16) == {"r>=2": PASS, "k>=f(r)": PASS, "n>=108(r+1)^r*k": FAIL}
    assert p.regime_checks(p.n_threshold(), min_r=3)["n>=108(r+1)^r*k"] == PASS
    assert TheoremParams(3, 12).regime_checks(10**9)["k>=f(r)"] == FAIL


def test_family_params():
    F = FamilyParams(OddCycleFamily.of([5, 7, 9, 11]))
    assert (F.p, F.k) == (1, 5)
    assert F.regime_checks(12)["k>=4p+1"] == PASS
    assert FamilyParams(OddCycleFamily.of([3, 7])).regime_checks(12)["k>=4p+1"] == FAIL


# common neighbourhood ------------------------------------------------------------

def test_common_neighborhood_examples():
    G, _ = g_construction(3, 16)
    params = TheoremParams(3, 13)
    rep = check_common_neighborhood_bound(G, PathWitness((0, 2)), params)
    assert outcome(rep) == (PASS, BELOW_REGIME, PASS) and rep.witnesses["count"] == 0
    rep = check_common_neighborhood_bound(complete_graph(100), PathWitness((0, 1)), params)
    assert outcome(rep) == (NOT_APPLICABLE, NOT_APPLICABLE, FAIL)
    assert rep.witnesses["count"] == 98 and rep.preconditions["C27-free"] == FAIL
    rep = check_common_neighborhood_bound(cycle_graph(6), PathWitness((0, 1)), TheoremParams(2, 5))
    assert rep.conclusion == PASS and rep.witnesses["count"] == 0


def test_common_neighborhood_rejects_bad_paths():
    params = TheoremParams(2, 5)
    with pytest.raises(InputError):
        check_common_neighborhood_bound(cycle_graph(6), PathWitness((0, 1, 2)), params)
    with pytest.raises(InputError):
        check_common_neighborhood_bound(cycle_graph(6), PathWitness((0, 3)), params)


# core sizes -------------------------------------------------------------------

def test_core_size_examples():
    G, _ = g_construction(3, 16)
    rep = check_core_size_bounds(G, TheoremParams(3, 13))
    assert rep.conclusion == PASS and rep.witnesses["strong_core_size"] == 4 == rep.witnesses["strong_bound"]
    rep = check_core_size_bounds(bc_construction(1, 12)[0], TheoremParams(2, 5))
    assert rep.witnesses["strong_core_size"] == 3
    rep = check_core_size_bounds(complete_graph(6), TheoremParams(3, 5))
    assert outcome(rep) == (FAIL, BELOW_REGIME, FAIL)
    assert rep.witnesses["strong_core_size"] == 6
    assert any("not a refutation" in note for note in rep.notes)


def test_greedy_core_sizes_are_lower_bounds():
    G, _ = g_construction(3, 24)
    rep = check_core_size_bounds(G, TheoremParams(3, 13), method="greedy")
    assert rep.witnesses["method"] == "greedy" and rep.witnesses["strong_core_size"] == 4
    assert any("lower bound" in note for note in rep.notes)


# shortest odd cycle ------------------------------------------------------------

@pytest.mark.parametrize("G,r,expected", [
    (bc_construction(2, 20)[0], 4, (PASS, IN_REGIME, PASS)),
    # delta = 2 is below 20/6, so the degree floor fails for r = 2
    (bc_construction(2, 20)[0], 2, (NOT_APPLICABLE, NOT_APPLICABLE, PASS)),
    (cycle_graph(7), 2, (PASS, IN_REGIME, PASS)),
    (cycle_graph(13), 1, (NOT_APPLICABLE, NOT_APPLICABLE, FAIL)),
    (cycle_graph(8), 2, (NOT_APPLICABLE, NOT_APPLICABLE, None)),
])
def test_shortest_odd_cycle_examples(G, r, expected):
    assert outcome(check_shortest_odd_cycle_bound(G, r)) == expected


# structure ------------------------------------------------------------------

@pytest.mark.parametrize("build,params", [
    (lambda: g_construction(3, 16), TheoremParams(3, 13)),
    (lambda: bc_construction(1, 12), TheoremParams(2, 5)),
    (lambda: bc_construction(2, 20), TheoremParams(4, 20)),
])
def test_structure_case_one_examples(build, params):
    G, sel = build()
    rep = check_structure_lemma(G, sel, params)
    assert rep.conclusion == PASS and rep.witnesses["case"] == "i"
    assert len(rep.witnesses["layers"]) == params.r + 1
    assert all(rep.witnesses["layer_disjointness"].values())


def test_structure_case_two_checks_cut_vertices():
    # three triangles hanging off 0 and 1; H is the middle one, so |H| <= r
    G = from_edge_list(7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5), (5, 6), (6, 1)])
    rep = check_structure_lemma(G, [0, 1, 2], TheoremParams(3, 13))
    assert rep.witnesses["case"] == "ii"
    assert rep.witnesses["cut_vertices"] == {"0": True, "1": True, "2": False}
    assert rep.witnesses["raw_conclusion"] == FAIL
    # the whole graph is a larger strong core, so the hypotheses fail
    assert rep.preconditions["H_maximum"] == FAIL and rep.conclusion == NOT_APPLICABLE


def test_structure_rejects_uncertified_core():
    G, _ = g_construction(3, 16)
    with pytest.raises(InputError):
        check_structure_lemma(G, [0, 1, 2], TheoremParams(3, 13))
    with pytest.raises(InputError):
        check_structure_lemma(G, [0, 4], TheoremParams(3, 13))


def test_layers_of_g_construction():
    G, sel = g_construction(2, 12)
    layers = NeighborhoodLayers.build(G, sel)
    assert layers.first[0] == frozenset({2, 3})
    # the second layer is N(N_i), which contains the anchor itself
    assert layers.second[0] == frozenset({0, 1})
    assert layers.third[0] == frozenset({2, 3})
    assert all(layers.disjointness().values())


# recognizers -------------------------------------------------------------------

@pytest.mark.parametrize("r,n", g_fixture_params(max_n=40))
def test_recognizes_own_g_fixtures(r, n):
    G, sel = g_construction(r, n)
    perm = list(range(n))
    random.Random(r * n).shuffle(perm)
    for H in (G, G.relabel(perm)):
        rec = recognize_g_construction(H, r)
        assert rec and H.relabel(rec.mapping) == G


@pytest.mark.parametrize("p,n", bc_fixture_params(max_n=40))
def test_recognizes_own_bc_fixtures(p, n):
    G, _ = bc_construction(p, n)
    rec = recognize_bc_construction(G, p)
    assert rec and G.relabel(rec.mapping) == G


def test_recognizer_negatives():
    G, _ = g_construction(4, 20)
    assert not recognize_g_construction(G.with_edges(remove=[(1, 2)]), 4)
    assert not recognize_g_construction(turan_graph(4, 20), 4)
    assert not recognize_g_construction(G, 3)
    assert recognize_bc_construction(g_construction(2, 12)[0], 1)
    assert not recognize_bc_construction(cycle_blowup(5, 2), 2)
    assert recognize_bc_construction(bc_construction(2, 20)[0], 2)


# theorems -------------------------------------------------------------------

def test_main_theorem_examples():
    params = TheoremParams(3, 13)
    rep = check_theorem_main(turan_graph(3, 24), params)
    assert outcome(rep) == (PASS, BELOW_REGIME, PASS)
    assert rep.regime["n>=108(r+1)^r*k"] == FAIL and "r_partition" in rep.witnesses
    G, _ = g_construction(3, 16)
    rep = check_theorem_main(G, params)
    assert outcome(rep) == (PASS, BELOW_REGIME, PASS)
    assert G.relabel(rep.witnesses["recognition"]["mapping"]) == G
    rep = check_theorem_main(G.with_edges(add=[(1, 5)]), params)
    assert outcome(rep) == (FAIL, BELOW_REGIME, FAIL)
    assert any("not a refutation" in note for note in rep.notes)


def test_main_theorem_regime_needs_r_at_least_three():
    rep = check_theorem_main(g_construction(2, 12)[0], TheoremParams(2, 5))
    assert rep.regime["r>=3"] == FAIL and rep.tier == BELOW_REGIME


@pytest.mark.parametrize("r,n", [(r, n) for r, n in g_fixture_params(max_n=60) if r >= 3])
def test_main_theorem_passes_on_fixtures(r, n):
    G, _ = g_construction(r, n)
    rep = check_theorem_main(G, TheoremParams(r, TheoremParams(r, 1).f))
    assert rep.conclusion == PASS and "recognition" in rep.witnesses


def test_second_theorem_examples():
    F = OddCycleFamily.of([5, 7, 9, 11])
    assert outcome(check_theorem_main2(complete_bipartite(6, 6), F)) == (PASS, BELOW_REGIME, PASS)
    rep = check_theorem_main2(bc_construction(1, 12)[0], F)
    assert outcome(rep) == (PASS, BELOW_REGIME, PASS)
    assert (rep.witnesses["p"], rep.witnesses["k"]) == (1, 5)
    rep = check_theorem_main2(cycle_graph(13), F)
    assert rep.conclusion == NOT_APPLICABLE
    assert rep.preconditions["min_degree>=n/(2(2p+1))"] == FAIL


def test_report_serialises():
    rep = check_theorem_main(turan_graph(3, 24), TheoremParams(3, 13))
    data = rep.to_dict()
    assert set(data) == {"target", "preconditions", "regime", "conclusion", "tier", "witnesses",
                         "notes"}
