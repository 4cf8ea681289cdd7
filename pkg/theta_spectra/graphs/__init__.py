from .vertex_set import VertexSet
from .graph import Graph, complete, cycle, empty, path, star
from .graph6 import Graph6Error, decode_graph6, encode_graph6, read_graph6, write_graph6
from .canonical import (
    CanonicalKey,
    ScaleError,
    canonical_form,
    canonical_key,
    is_canonical,
)
from .constructors import (
    Family,
    FamilySpec,
    cone_over_triangles,
    friendship,
    generalized_theta,
    h_graph,
    split_star,
    split_star_plus,
    theta,
    witness_g1,
    witness_g2,
    witness_g3,
)
