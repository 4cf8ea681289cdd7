"""
This module computes the signless Laplacian spectral radius q(G) and its
eigenvector.

Cyclic Jacobi diagonalization gives the result; power iteration with the
Rayleigh quotient, started from the all-ones vector, is run alongside as an
independent estimate.

Classes:
    - SpectralResult: q(G), its unit eigenvector and solver metadata.

Functions:
    - jacobi_eigensystem: All eigenpairs of a dense symmetric matrix.
    - power_iteration: Dominant eigenpair of a positive semidefinite matrix.
    - q_max: The spectral radius of Q(G).
    - same_spectral_radius: Exact decision of q(G) == q(H) inside the tie band.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..config import RESIDUAL_TOLERANCE, TIE_BAND
from ..graphs import Graph
from .matrices import signless_characteristic_polynomial, signless_laplacian
from .polynomials import largest_real_root, polynomial_gcd

logger = logging.getLogger(__name__)

# Estimates from power iteration further apart than this are reported.
CROSS_CHECK_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SpectralResult:
    """
    The largest eigenvalue of Q(G) with its eigenvector.

    Attributes:
        q (float): The signless Laplacian spectral radius.
        vector (np.ndarray): Unit eigenvector; its first non-zero entry is positive.
        residual (float): ||Qx - qx||_2.
        iterations (int): Jacobi sweeps performed.
        power_estimate (Optional[float]): The power-iteration value, when run.
    """

    q: float
    vector: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    power_estimate: Optional[float] = None

    @property
    def is_positive(self) -> bool:
        """True iff every eigenvector entry is strictly positive (Perron vector)."""
        return bool(np.all(self.vector > 0))


def jacobi_eigensystem(
    matrix: np.ndarray, tolerance: float = 1e-14, max_sweeps: int = 100
) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Diagonalizes a symmetric matrix by cyclic Jacobi rotations.

    Args:
        matrix (np.ndarray): A symmetric square matrix; it is not modified.
        tolerance (float): Stop once the off-diagonal Frobenius norm is below
            ``tolerance`` times the matrix norm.
        max_sweeps (int): Upper bound on full sweeps.

    Returns:
        Tuple[np.ndarray, np.ndarray, int]: Eigenvalues, eigenvectors as columns,
        and the number of sweeps performed.

    Raises:
        ValueError: If the matrix is not square and symmetric.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, received shape {a.shape}.")
    if not np.allclose(a, a.T):
        raise ValueError("Jacobi diagonalization needs a symmetric matrix.")
    n = a.shape[0]
    v = np.eye(n)
    scale = max(float(np.linalg.norm(a)), 1.0)
    sweeps = 0
    previous = float("inf")
    while sweeps < max_sweeps:
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        # a sweep that no longer shrinks the off-diagonal mass has hit the rounding floor
        if off <= tolerance * scale or off >= previous:
            break
        previous = off
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.hypot(theta, 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        logger.warning("Jacobi stopped after %d sweeps without converging.", max_sweeps)
    return np.diag(a).copy(), v, sweeps


def power_iteration(
    matrix: np.ndarray,
    tolerance: float = RESIDUAL_TOLERANCE,
    max_iterations: int = 5000,
) -> Tuple[float, np.ndarray, int, float]:
    """
    Dominant eigenpair of a positive semidefinite matrix.

    Starts from the all-ones vector, which is never orthogonal to a
    non-negative Perron vector, and stops on the residual of the Rayleigh
    quotient.

    Returns:
        Tuple[float, np.ndarray, int, float]: Eigenvalue, unit vector, iterations
        used, final residual.
    """
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    x = np.ones(n) / np.sqrt(n)
    value = 0.0
    residual = float("inf")
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        y = a @ x
        value = float(x @ y)
        residual = float(np.linalg.norm(y - value * x))
        if residual <= tolerance:
            break
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm
    return value, x, iterations, residual


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    for entry in vector:
        if abs(entry) > 1e-12:
            return vector if entry > 0 else -vector
    return vector


def q_max(graph: Graph, cross_check: bool = True) -> SpectralResult:
    """
    Returns the signless Laplacian spectral radius of ``graph``.

    Args:
        graph (Graph): Any graph.
        cross_check (bool, optional): Also run power iteration and log a warning
            when the two estimates disagree. Defaults to True.
    """
    matrix = signless_laplacian(graph)
    values, vectors, sweeps = jacobi_eigensystem(matrix)
    index = int(np.argmax(values))
    vector = vectors[:, index]
    vector = _fix_sign(vector / np.linalg.norm(vector))
    q = float(vector @ matrix @ vector)
    residual = float(np.linalg.norm(matrix @ vector - q * vector))
    if residual > RESIDUAL_TOLERANCE:
        logger.warning("Residual %.3e above tolerance for %r.", residual, graph)
    power_estimate = None
    if cross_check:
        power_estimate, _, steps, power_residual = power_iteration(matrix)
        if power_residual > RESIDUAL_TOLERANCE:
            logger.debug(
                "Power iteration stalled at residual %.3e after %d steps.",
                power_residual,
                steps,
            )
        elif abs(power_estimate - q) > CROSS_CHECK_TOLERANCE:
            logger.warning(
                "Jacobi q=%.12f and power iteration q=%.12f disagree for %r.",
                q,
                power_estimate,
                graph,
            )
    return SpectralResult(q, vector, residual, sweeps, power_estimate)


def same_spectral_radius(
    g: Graph, h: Graph, q_g: Optional[float] = None, q_h: Optional[float] = None
) -> bool:
    """
    Decides q(G) == q(H) exactly.

    Values further apart than the tie band differ. Otherwise the radii are equal
    iff the characteristic polynomials of Q(G) and Q(H) share a factor whose
    largest root is q.
    """
    if q_g is None:
        q_g = q_max(g, cross_check=False).q
    if q_h is None:
        q_h = q_max(h, cross_check=False).q
    if abs(q_g - q_h) > TIE_BAND:
        return False
    p_g = signless_characteristic_polynomial(g)
    p_h = signless_characteristic_polynomial(h)
    if p_g == p_h:
        return True
    common = polynomial_gcd(p_g, p_h)
    if len(common) < 2:
        return False
    return abs(largest_real_root(common) - q_g) <= TIE_BAND
