"""
This module collects the numeric tolerances, capacity limits and run-time
settings shared by the rest of the package.

Functions:
    - resolve_jobs: Determines the worker count from a CLI value or the environment.
"""

import os
from typing import Optional

# Largest eigenvalue residual ||Qx - qx|| accepted from the eigensolver.
RESIDUAL_TOLERANCE = 1e-10

# Two spectral radii closer than this are compared exactly.
TIE_BAND = 1e-9

# Agreement required between a numeric q and its closed form.
CLOSED_FORM_TOLERANCE = 1e-8

# Bisection stopping width for polynomial roots.
ROOT_TOLERANCE = 1e-12

# One adjacency row per machine word.
MAX_ORDER = 64

MAX_CANONICAL_ORDER = 10
MAX_ENUMERATION_ORDER = 8

JOBS_ENV_VAR = "SPECTRA_JOBS"


def resolve_jobs(value: Optional[int] = None) -> int:
    """
    Resolves the number of worker processes.

    Args:
        value (Optional[int]): Explicit worker count, usually from ``--jobs``.

    Returns:
        int: ``value`` if given, else ``$SPECTRA_JOBS`` if set, else 1.

    Raises:
        ValueError: If the resolved value is not a positive integer.
    """
    source = "--jobs"
    if value is None:
        raw = os.environ.get(JOBS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return 1
        source = JOBS_ENV_VAR
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(
                f"{JOBS_ENV_VAR} must be a positive integer, received '{raw}'."
            ) from None
    if value < 1:
        raise ValueError(f"{source} expected greater than 0, received {value}.")
    return value
