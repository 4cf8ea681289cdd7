"""
This module provides exact characteristic polynomials and root finding for the
real-rooted polynomials that arise from symmetric matrices.

Polynomials are coefficient lists, highest degree first: ``[1, a, b, c]`` is
x^3 + a x^2 + b x + c.

Functions:
    - characteristic_polynomial: det(xI - M), exactly.
    - evaluate: Horner evaluation for ints, Fractions or floats.
    - polynomial_gcd / polynomial_divides: Exact Euclidean arithmetic over the rationals.
    - largest_real_root: Largest root of a real-rooted polynomial by bisection.
    - bisect_root: Root inside a sign-changing bracket.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import List, Sequence, Tuple, Union

from ..config import ROOT_TOLERANCE

Number = Union[int, Fraction]
Polynomial = List[Number]


def _normalize(values: Sequence[Number]) -> Polynomial:
    out = []
    for value in values:
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        out.append(value)
    return out


def characteristic_polynomial(matrix: Sequence[Sequence[Number]]) -> Polynomial:
    """
    Returns the coefficients of det(xI - M) by the Faddeev-LeVerrier recursion.

    Integer matrices stay in integer arithmetic (every division is exact);
    rational and float entries use Fractions. A float is taken as the binary
    fraction it stores, so the result is exact for the matrix as given.

    Raises:
        ValueError: If the matrix is empty, not square, or has an entry that is
            neither rational nor a finite float.
    """
    k = len(matrix)
    if k == 0 or any(len(row) != k for row in matrix):
        raise ValueError(f"Expected a non-empty square matrix, received {k} rows.")
    for row in matrix:
        for entry in row:
            if isinstance(entry, float):
                if not math.isfinite(entry):
                    raise ValueError(f"Characteristic polynomials need finite entries, found {entry!r}.")
            elif not isinstance(entry, Rational):
                raise ValueError(
                    f"Characteristic polynomials need rational or float entries, found {entry!r}."
                )
    integral = all(isinstance(entry, int) for row in matrix for entry in row)
    a = [list(row) if integral else [Fraction(e) for e in row] for row in matrix]
    coefficients: List[Number] = [1]
    current = [[0] * k for _ in range(k)]
    for step in range(1, k + 1):
        # M_step = A M_{step-1} + c_{step-1} I
        product = _multiply(a, current)
        for i in range(k):
            product[i][i] += coefficients[-1]
        current = product
        trace = sum(_multiply_diagonal(a, current))
        if integral:
            if trace % step:
                raise ArithmeticError("Inexact division in the Faddeev-LeVerrier recursion.")
            coefficients.append(-(trace // step))
        else:
            coefficients.append(-Fraction(trace) / step)
    return _normalize(coefficients)


def _multiply(a, b):
    k = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)
    ]


def _multiply_diagonal(a, b):
    k = len(a)
    return [sum(a[i][t] * b[t][i] for t in range(k)) for i in range(k)]


def evaluate(coefficients: Sequence, x):
    """Horner evaluation; exact when ``x`` and the coefficients are rational."""
    value = 0
    for c in coefficients:
        value = value * x + c
    return value


def derivative(coefficients: Sequence[Number]) -> Polynomial:
    degree = len(coefficients) - 1
    return [c * (degree - i) for i, c in enumerate(coefficients[:-1])]


def _strip(coefficients: Sequence[Number]) -> Polynomial:
    out = list(coefficients)
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return out


def polynomial_divmod(
    numerator: Sequence[Number], denominator: Sequence[Number]
) -> Tuple[Polynomial, Polynomial]:
    """
    Divides polynomials exactly over the rationals.

    Raises:
        ZeroDivisionError: If ``denominator`` is the zero polynomial.
    """
    den = _strip([Fraction(c) for c in denominator])
    if den == [0]:
        raise ZeroDivisionError("Polynomial division by zero.")
    rem = _strip([Fraction(c) for c in numerator])
    if len(rem) < len(den):
        return [0], _normalize(rem)
    quotient = []
    while len(rem) >= len(den):
        factor = rem[0] / den[0]
        quotient.append(factor)
        for i, c in enumerate(den):
            rem[i] -= factor * c
        rem.pop(0)
    return _normalize(quotient), _normalize(_strip(rem) if rem else [0])


def polynomial_divides(divisor: Sequence[Number], dividend: Sequence[Number]) -> bool:
    """True iff ``divisor`` divides ``dividend`` over the rationals."""
    _, remainder = polynomial_divmod(dividend, divisor)
    return all(c == 0 for c in remainder)


def polynomial_gcd(a: Sequence[Number], b: Sequence[Number]) -> Polynomial:
    """Returns the monic greatest common divisor of two non-zero polynomials."""
    x = _strip([Fraction(c) for c in a])
    y = _strip([Fraction(c) for c in b])
    while y != [0]:
        _, r = polynomial_divmod(x, y)
        x, y = y, _strip([Fraction(c) for c in r])
    lead = x[0]
    return _normalize([c / lead for c in x])


def bisect_root(
    coefficients: Sequence[Number],
    lo: float,
    hi: float,
    tolerance: float = ROOT_TOLERANCE,
) -> float:
    """
    Returns a root of the polynomial in ``[lo, hi]``.

    Raises:
        ValueError: If the polynomial does not change sign on the bracket.
    """
    f = [float(c) for c in coefficients]
    f_lo = evaluate(f, lo)
    f_hi = evaluate(f, hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo < 0) == (f_hi < 0):
        raise ValueError(f"No sign change on the bracket [{lo}, {hi}].")
    for _ in range(200):
        if hi - lo <= tolerance * max(1.0, abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        f_mid = evaluate(f, mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cauchy_bound(coefficients: Sequence[Number]) -> float:
    """Every root has absolute value below 1 + max |a_i / a_0|."""
    lead = float(coefficients[0])
    return 1.0 + max((abs(float(c) / lead) for c in coefficients[1:]), default=0.0)


def largest_real_root(
    coefficients: Sequence[Number], tolerance: float = ROOT_TOLERANCE
) -> float:
    """
    Returns the largest root of a polynomial whose roots are all real.

    The root lies between the largest critical point and the Cauchy bound, and
    the polynomial is non-positive (monic case) at that critical point.

    Raises:
        ValueError: If the polynomial is constant.
    """
    poly = _strip(coefficients)
    if len(poly) < 2:
        raise ValueError("A constant polynomial has no roots.")
    if poly[0] < 0:
        poly = [-c for c in poly]
    if len(poly) == 2:
        return -float(poly[1]) / float(poly[0])
    lo = largest_real_root(derivative(poly), tolerance)
    hi = cauchy_bound(poly)
    if evaluate([float(c) for c in poly], lo) >= 0:
        return lo
    return bisect_root(poly, lo, hi, tolerance)
