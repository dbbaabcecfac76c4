"""
Walk through the blob constructions. They avoid every long odd cycle and meet
the degree floor with equality, yet still need r+1 colors.
"""

from oddcore import constructions as con
from oddcore.bipartization import d2, gamma2
from oddcore.coloring import chromatic_number
from oddcore.cores import exact_maximum_strong_core
from oddcore.graph import min_degree
from oddcore.parity import contains_cycle_of_length, odd_girth

## A clique of blobs
# r+1 copies of K_{t,t} glued onto a clique through one vertex each.
r, n = 3, 16
G, selected = con.g_construction(r, n)
print(f"g({r},{n}): n={G.n} m={G.m} selected={selected}")
print("min degree", min_degree(G), "vs n/(2r+2) =", n / (2 * r + 2))
print("chromatic number", chromatic_number(G)[0])

# Long odd cycles cannot use more than one blob, so they never appear.
longest_odd = max(L for L in range(3, n + 1, 2) if contains_cycle_of_length(G, L).found)
print("longest odd cycle", longest_odd)

# The selected clique is a maximum strong core for k = 3r+4.
print("largest strong core", sorted(exact_maximum_strong_core(G, 3 * r + 4)))

## A cycle of blobs
# Same idea, but the selected vertices form an odd cycle rather than a clique.
B, sel = con.bc_construction(2, 20)
length, cycle = odd_girth(B)
print(f"\nbc(2,20): m={B.m} odd girth={length} via {cycle.vertices}")
print("chromatic number", chromatic_number(B)[0])

## Turan graphs and the glued star
# Turan graphs are the dense, easily colored comparison point.
T = con.turan_graph(3, 12)
print(f"\nT_3(12): m={T.m} chi={chromatic_number(T)[0]}")

# T*(r, n): a complete bipartite graph with a clique K_r hanging off one vertex.
# Making it bipartite costs r-2 vertex deletions, or a quadratic number of edges.
for r in (3, 4, 5):
    S = con.t_star(r, 12)
    print(f"T*({r},12): d2={d2(S).size} gamma2={gamma2(S).size}")

## Blow-ups
# Replacing each vertex of C_5 with an independent set keeps the odd girth at 5
# while driving the minimum degree up linearly.
for t in (1, 2, 3):
    U = con.cycle_blowup(5, t)
    print(f"C5({t}): n={U.n} min degree={min_degree(U)} odd girth={odd_girth(U)[0]}")
