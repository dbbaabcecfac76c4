"""Odd cycles, strong cores and chromatic thresholds on small graphs."""

from .bipartization import BipartizationResult, d2, gamma2, gamma2_by_edge_branching, max_cut
from .coloring import ColoringCertificate, chromatic_number, is_k_colorable, is_r_partite
from .constructions import (ConstructionSpec, bc_construction, build, complete_bipartite,
                            complete_graph, cycle_blowup, cycle_graph, g_construction,
                            path_graph, petersen_graph, t_star, turan_graph)
from .cores import (CoreCertificate, ExtensionStep, apply_extension, certify_2k_core,
                    certify_strong_2k_core, exact_maximum_2k_core, exact_maximum_strong_core,
                    find_extension, greedy_max_strong_core, iter_extensions)
from .errors import BudgetExceeded, InputError
from .graph import (Graph, VertexSet, articulation_points, from_edge_list, induced_subgraph,
                    is_bipartite, is_connected, is_cut_vertex, min_degree, parse_edge_list,
                    format_edge_list)
from .parity import (CycleWitness, OddCycleFamily, PathWitness, SearchOutcome,
                     contains_cycle_of_length, find_path, is_family_free, odd_girth,
                     parity_path_exists)

__all__ = [
    "BipartizationResult", "BudgetExceeded", "ColoringCertificate", "ConstructionSpec",
    "CoreCertificate", "CycleWitness", "ExtensionStep", "Graph", "InputError", "OddCycleFamily",
    "PathWitness", "SearchOutcome", "VertexSet", "apply_extension", "articulation_points",
    "bc_construction", "build", "certify_2k_core", "certify_strong_2k_core", "chromatic_number",
    "complete_bipartite", "complete_graph", "contains_cycle_of_length", "cycle_blowup",
    "cycle_graph", "d2", "exact_maximum_2k_core", "exact_maximum_strong_core", "find_extension",
    "find_path", "format_edge_list", "from_edge_list", "g_construction", "gamma2",
    "gamma2_by_edge_branching", "greedy_max_strong_core", "induced_subgraph", "is_bipartite",
    "is_connected", "is_cut_vertex", "is_family_free", "is_k_colorable", "is_r_partite",
    "iter_extensions", "max_cut", "min_degree", "odd_girth", "parity_path_exists",
    "parse_edge_list", "path_graph", "petersen_graph", "t_star", "turan_graph",
]
