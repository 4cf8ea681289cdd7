from .orderly import EnumerationConstraints, EnumerationStream, enumerate_graphs
from .extremal import ExtremalReport, extremal_search, rank_by_spectral_radius
from .verification import (
    LEMMA_CHECKS,
    LEMMA_IDS,
    THEOREM_IDS,
    THEOREMS,
    TheoremSpec,
    VerificationResult,
    random_connected_graph,
    resolve_lemma,
    resolve_theorem,
    sample_monotonicity,
    verify_degree_bounds,
    verify_h_graph_max,
    verify_lemma,
    verify_monotonicity,
    verify_neighborhood_structure,
    verify_path_bound,
    verify_theorem,
    verify_witnesses,
)
