__version__ = "0.1.0"

from .graphs import (
    VertexSet,
    Graph,
    Graph6Error,
    CanonicalKey,
    ScaleError,
    Family,
    FamilySpec,
    canonical_key,
    decode_graph6,
    encode_graph6,
    friendship,
    split_star,
    split_star_plus,
    theta,
    generalized_theta,
    h_graph,
    cone_over_triangles,
)
from .spectral import (
    SpectralResult,
    QuotientMatrix,
    QuotientMode,
    NonEquitablePartitionError,
    q_max,
    signless_laplacian,
    quotient_matrix,
    max_degree_pressure,
    das_bound,
)
from .forbidden import Pattern, Embedding, parse_pattern, contains_subgraph, is_free, has_path_subgraph
from .enumeration import (
    EnumerationConstraints,
    ExtremalReport,
    VerificationResult,
    enumerate_graphs,
    extremal_search,
    verify_theorem,
    verify_lemma,
)
