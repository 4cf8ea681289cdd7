"""
This module detects paths as subgraphs.
"""

from typing import Set, Tuple

from ..graphs import Graph


def has_path_subgraph(host: Graph, k: int) -> bool:
    """
    Checks whether ``host`` contains a path on ``k`` vertices.

    Depth-first extension of simple paths; a state is the current end vertex
    plus the set of visited vertices, and failed states are remembered.

    Raises:
        ValueError: If ``k < 1``.
    """
    if k < 1:
        raise ValueError(f"has_path_subgraph requires k >= 1, received {k}.")
    if k > host.n:
        return False
    if k == 1:
        return True
    failed: Set[Tuple[int, int]] = set()
    rows = host.rows

    def extend(end: int, visited: int, length: int) -> bool:
        if length == k:
            return True
        if (end, visited) in failed:
            return False
        options = rows[end] & ~visited
        while options:
            low = options & -options
            options ^= low
            if extend(low.bit_length() - 1, visited | low, length + 1):
                return True
        failed.add((end, visited))
        return False

    return any(extend(v, 1 << v, 1) for v in range(host.n))

