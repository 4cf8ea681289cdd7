"""
This module decides whether a host graph contains a pattern as a (not
necessarily induced) subgraph.

The search is plain backtracking. Pattern vertices are matched in a fixed order
that starts at a vertex of largest degree and keeps each next vertex attached to
the matched part, so every candidate set is the intersection of host
neighbourhoods of already matched neighbours, filtered by degree.

Classes:
    - Embedding: An injective, edge-preserving map from pattern to host.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from ..graphs import Graph
from .patterns import Pattern

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    """
    Attributes:
        mapping (Tuple[int, ...]): ``mapping[p]`` is the host vertex of pattern vertex ``p``.
    """

    mapping: Tuple[int, ...]

    def image(self, vertex: int) -> int:
        return self.mapping[vertex]

    def is_valid(self, host: Graph, target: Graph) -> bool:
        """True iff the map is injective and carries every pattern edge to a host edge."""
        if len(set(self.mapping)) != len(self.mapping) or len(self.mapping) != target.n:
            return False
        return all(host.has_edge(self.mapping[u], self.mapping[v]) for u, v in target.edges())


def _match_order(target: Graph) -> List[int]:
    degrees = target.degrees()
    order = [max(range(target.n), key=lambda v: (degrees[v], -v))]
    placed = 1 << order[0]
    while len(order) < target.n:
        v = max(
            (w for w in range(target.n) if not (placed >> w) & 1),
            key=lambda w: (bin(target.rows[w] & placed).count("1"), degrees[w], -w),
        )
        order.append(v)
        placed |= 1 << v
    return order


def _degrees_fit(host: Graph, target: Graph) -> bool:
    host_degrees = sorted(host.degrees(), reverse=True)
    target_degrees = sorted(target.degrees(), reverse=True)
    return all(t <= h for t, h in zip(target_degrees, host_degrees))


def contains_subgraph(host: Graph, pattern: Pattern) -> Optional[Embedding]:
    """
    Returns the first embedding of ``pattern`` in ``host`` in search order, or None.

    Args:
        host (Graph): The graph searched.
        pattern (Pattern): The subgraph looked for.

    Returns:
        Optional[Embedding]: An embedding when one exists.
    """
    target = pattern.target
    if target.n > host.n or target.m > host.m or not _degrees_fit(host, target):
        return None
    order = _match_order(target)
    host_degrees = host.degrees()
    target_degrees = target.degrees()
    eligible = [
        sum(1 << h for h in range(host.n) if host_degrees[h] >= target_degrees[p])
        for p in range(target.n)
    ]
    # earlier[i]: positions before i that are pattern neighbours of order[i]
    earlier = [
        [j for j in range(i) if (target.rows[order[i]] >> order[j]) & 1]
        for i in range(len(order))
    ]
    image = [0] * len(order)

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        candidates = eligible[order[i]] & ~used
        for j in earlier[i]:
            candidates &= host.rows[image[j]]
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    if not extend(0, 0):
        return None
    mapping = [0] * target.n
    for i, p in enumerate(order):
        mapping[p] = image[i]
    logger.debug("Found %s in %r at %s.", pattern, host, mapping)
    return Embedding(tuple(mapping))


def find_forbidden(host: Graph, family: Iterable[Pattern]) -> Optional[Tuple[Pattern, Embedding]]:
    """Returns the first pattern of ``family`` that embeds in ``host``, with its embedding."""
    for pattern in family:
        embedding = contains_subgraph(host, pattern)
        if embedding is not None:
            return pattern, embedding
    return None


def is_free(host: Graph, family: Iterable[Pattern]) -> bool:
    """True iff no pattern of ``family`` is a subgraph of ``host``."""
    return find_forbidden(host, family) is None
