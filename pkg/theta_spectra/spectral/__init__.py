from .polynomials import (
    characteristic_polynomial,
    largest_real_root,
    polynomial_divides,
    polynomial_gcd,
)
from .matrices import (
    adjacency_matrix,
    signless_characteristic_polynomial,
    signless_laplacian,
)
from .eigensolver import (
    SpectralResult,
    jacobi_eigensystem,
    power_iteration,
    q_max,
    same_spectral_radius,
)
from .closed_forms import (
    CubicSpec,
    closed_q_friendship,
    closed_q_splitstar2,
    closed_q_splitstarplus1,
    friendship_cubic,
    q_cone_over_triangles,
    split_star_plus_cubic,
)
from .bounds import (
    NeighborhoodDecomposition,
    attains_pressure_bound,
    das_bound,
    das_bound_exact,
    degree_pressure,
    degree_pressure_exact,
    max_degree_pressure,
    max_degree_pressure_exact,
    neighborhood_decomposition,
)
from .quotient import (
    NonEquitablePartitionError,
    QuotientMatrix,
    QuotientMode,
    largest_eigenvalue_small,
    quotient_divides_spectrum,
    quotient_matrix,
)
