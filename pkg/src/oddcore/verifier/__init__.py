"""Checks of lemma and theorem statements on concrete graphs."""

from .delta_chi import DeltaChiResult, canonical_code, exact_delta_chi
from .lemmas import (NeighborhoodLayers, check_common_neighborhood_bound, check_core_size_bounds,
                     check_shortest_odd_cycle_bound, check_structure_lemma)
from .recognize import Recognition, recognize_bc_construction, recognize_g_construction
from .report import (BELOW_REGIME, FAIL, IN_REGIME, INCONCLUSIVE, NOT_APPLICABLE, PASS, SKIPPED,
                     FamilyParams, TheoremParams, VerificationReport)
from .search import SearchConfig, merge_reports, search_counterexamples, search_many
from .theorems import check_theorem_main, check_theorem_main2

__all__ = [
    "BELOW_REGIME", "FAIL", "IN_REGIME", "INCONCLUSIVE", "NOT_APPLICABLE", "PASS", "SKIPPED",
    "DeltaChiResult", "FamilyParams", "NeighborhoodLayers", "Recognition", "SearchConfig",
    "TheoremParams", "VerificationReport", "canonical_code", "check_common_neighborhood_bound",
    "check_core_size_bounds", "check_shortest_odd_cycle_bound", "check_structure_lemma",
    "check_theorem_main", "check_theorem_main2", "exact_delta_chi", "merge_reports",
    "recognize_bc_construction", "recognize_g_construction", "search_counterexamples",
    "search_many",
]
