"""
How the verifier separates "the hypotheses fail" from "the conclusion fails",
and why a failure on a small graph is an observation rather than a refutation.
"""

import json

from oddcore.constructions import complete_graph, cycle_graph, g_construction, turan_graph
from oddcore.parity import OddCycleFamily, PathWitness
from oddcore.verifier import (SearchConfig, TheoremParams, check_common_neighborhood_bound,
                              check_shortest_odd_cycle_bound, check_structure_lemma,
                              check_theorem_main, exact_delta_chi, recognize_g_construction,
                              search_counterexamples)


def show(report):
    print(f"  {report.target}: {report.conclusion} ({report.tier})")
    for name, status in report.preconditions.items():
        print(f"    {name:<28} {status}")


params = TheoremParams(r=3, k=13)
G, selected = g_construction(3, 16)

## Reports carry three layers of information
# Hypotheses on the graph, the parameter regime, and the raw conclusion.
show(check_theorem_main(G, params))
show(check_theorem_main(turan_graph(3, 24), params))

# One extra edge between blobs: still C27-free, now neither 3-partite nor a
# relabelled construction. The report flags it as below the size threshold.
bent = G.with_edges(add=[(1, 5)])
report = check_theorem_main(bent, params)
show(report)
print("  notes:", report.notes)

## Hypotheses decide applicability
# K_100 violates the bound, but it is full of long odd cycles.
show(check_common_neighborhood_bound(complete_graph(100), PathWitness((0, 1)), params))
show(check_shortest_odd_cycle_bound(cycle_graph(13), r=1))

## Structure around a maximum strong core
report = check_structure_lemma(G, selected, params)
show(report)
for row in report.witnesses["layers"]:
    print("   ", row)

## Recognition returns an explicit isomorphism
perm = [15 - v for v in range(16)]
rec = recognize_g_construction(G.relabel(perm), 3)
print("\nrecognized:", bool(rec), "map:", rec.mapping)

## Exact finite-n profile
for n in (5, 6, 7):
    res = exact_delta_chi([3], 2, n)
    print(f"triangle-free, chi>2, n={n}: max min-degree/n = {res.value}, "
          f"{len(res.witnesses)} extremal class(es)")

## Local search below the threshold
config = SearchConfig(n=12, seed=1, iterations=2000, family=OddCycleFamily.of([5, 7, 9, 11]))
report = search_counterexamples(config)
best = report.witnesses["best"]
print("\nsearch:", report.conclusion, json.dumps({k: best[k] for k in ("chi", "min_degree")}))
