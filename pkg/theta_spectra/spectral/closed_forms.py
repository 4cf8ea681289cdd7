"""
This module evaluates the spectral radii of the extremal families without an
eigensolver: radicals where one exists, otherwise the largest root of the
defining cubic bracketed by the family's known sandwich bounds.

Classes:
    - CubicSpec: A monic cubic with a bracket around its largest root.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from ..config import ROOT_TOLERANCE
from .polynomials import bisect_root, derivative, evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CubicSpec:
    """
    The monic cubic x^3 + a x^2 + b x + c with a bracket ``(lo, hi)``.

    Attributes:
        coefficients (Tuple[int, int, int]): ``(a, b, c)``.
        bracket (Tuple[float, float]): Interval expected to hold the largest root.
    """

    coefficients: Tuple[int, int, int]
    bracket: Tuple[float, float]

    @property
    def polynomial(self):
        return [1, *self.coefficients]

    def has_sign_change(self, lo: float, hi: float) -> bool:
        return evaluate(self.polynomial, lo) < 0 < evaluate(self.polynomial, hi)

    def largest_root(self, tolerance: float = ROOT_TOLERANCE) -> float:
        """
        Bisects on the bracket, widening it by 1 on each side until the cubic is
        negative at ``lo`` and positive, increasing and convex at ``hi`` (so no
        root lies beyond ``hi``).
        """
        lo, hi = self.bracket
        poly = self.polynomial
        slope = derivative(poly)
        for _ in range(64):
            beyond = evaluate(slope, hi) > 0 and evaluate(derivative(slope), hi) > 0
            if self.has_sign_change(lo, hi) and beyond:
                break
            logger.debug("Widening bracket [%s, %s] for cubic %s.", lo, hi, poly)
            lo, hi = lo - 1.0, hi + 1.0
        else:
            raise ArithmeticError(f"No sign change found for cubic {poly}.")
        return bisect_root(poly, lo, hi, tolerance)


def _require(n: int, minimum: int, name: str) -> None:
    if n < minimum:
        raise ValueError(f"{name}(n) requires n >= {minimum}, received {n}.")


def friendship_cubic(n: int) -> CubicSpec:
    """x^3 - (n+3)x^2 + 3n x - 2n + 4, whose largest root is q(F_n) for even n."""
    return CubicSpec((-(n + 3), 3 * n, -2 * n + 4), (n + 2 / n, n + 2 / (n - 1)))


def split_star_plus_cubic(n: int) -> CubicSpec:
    """x^3 - (n+3)x^2 + 3n x - 4, the quotient polynomial of Q(S_{n,1}^+)."""
    return CubicSpec((-(n + 3), 3 * n, -4), (float(n), float(n + 1)))


def closed_q_friendship(n: int) -> float:
    """
    q(F_n): (n + 2 + sqrt((n-2)^2 + 8)) / 2 for odd n, the largest root of
    ``friendship_cubic(n)`` for even n.

    Raises:
        ValueError: If ``n < 3``.
    """
    _require(n, 3, "closed_q_friendship")
    if n % 2 == 1:
        return (n + 2 + math.sqrt((n - 2) ** 2 + 8)) / 2
    return friendship_cubic(n).largest_root()


def closed_q_splitstar2(n: int) -> float:
    """
    q(S_{n,2}) = (n + 2 + sqrt(n^2 + 4n - 12)) / 2.

    Raises:
        ValueError: If ``n < 4``.
    """
    _require(n, 4, "closed_q_splitstar2")
    return (n + 2 + math.sqrt(n * n + 4 * n - 12)) / 2


def closed_q_splitstarplus1(n: int) -> float:
    """
    q(S_{n,1}^+), the largest root of ``split_star_plus_cubic(n)``.

    Raises:
        ValueError: If ``n < 4``.
    """
    _require(n, 4, "closed_q_splitstarplus1")
    return split_star_plus_cubic(n).largest_root()


def q_cone_over_triangles(n: int) -> float:
    """
    q(K_1 ∨ ((n-1)/3)K_3) = (n + 4 + sqrt((n-4)^2 + 16)) / 2.

    Raises:
        ValueError: Unless ``n ≡ 1 (mod 3)`` and ``n >= 4``.
    """
    if n < 4 or n % 3 != 1:
        raise ValueError(f"q_cone_over_triangles(n) requires n ≡ 1 (mod 3), n >= 4, received {n}.")
    return (n + 4 + math.sqrt((n - 4) ** 2 + 16)) / 2
