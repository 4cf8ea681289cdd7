"""
This module enumerates graphs of a given order, one per isomorphism class, by
orderly generation.

Edges are numbered in column order (01, 02, 12, 03, 13, 23, ...). A graph is
kept iff its adjacency string is the greatest among its relabelings. Children
of a kept graph add one edge after its last edge; since clearing the last edge
of a canonical graph leaves a canonical graph, every class is reached exactly
once and non-canonical children never need expanding.

Classes:
    - EnumerationConstraints: Filters applied to emitted graphs.
    - EnumerationStream: A re-iterable stream of class representatives.

Functions:
    - enumerate_graphs: Builds an EnumerationStream.
"""

import logging
import multiprocessing as mp
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..config import MAX_ENUMERATION_ORDER
from ..graphs import Graph, ScaleError
from ..graphs.canonical import has_greater_relabeling

logger = logging.getLogger(__name__)

# Subtrees rooted at this many edges are handed to worker processes.
SPLIT_DEPTH = 3

Rows = Tuple[int, ...]


@dataclass(frozen=True)
class EnumerationConstraints:
    """
    Attributes:
        no_isolated (bool): Keep only graphs of minimum degree at least 1.
        connected (bool): Keep only connected graphs.
        edges (Optional[int]): Keep only graphs with exactly this many edges.
    """

    no_isolated: bool = False
    connected: bool = False
    edges: Optional[int] = None

    def accepts(self, graph: Graph) -> bool:
        if self.edges is not None and graph.m != self.edges:
            return False
        if self.no_isolated and graph.has_isolated_vertex():
            return False
        if self.connected and not graph.is_connected():
            return False
        return True

    def exhausted(self, m: int) -> bool:
        """True once no descendant of a graph with ``m`` edges can be accepted."""
        return self.edges is not None and m >= self.edges

    def __str__(self) -> str:
        parts = []
        if self.no_isolated:
            parts.append("no-isolated")
        if self.connected:
            parts.append("connected")
        if self.edges is not None:
            parts.append(f"m={self.edges}")
        return ",".join(parts) or "all"


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _children(rows: Rows, n: int, start: int, pairs: Sequence[Tuple[int, int]]) -> Iterator[Tuple[Rows, int]]:
    for position in range(start, len(pairs)):
        i, j = pairs[position]
        child = list(rows)
        child[i] |= 1 << j
        child[j] |= 1 << i
        if not has_greater_relabeling(child, n):
            yield tuple(child), position + 1


def _subtree(
    rows: Rows, n: int, start: int, m: int, constraints: EnumerationConstraints
) -> Iterator[Rows]:
    """Canonical graphs of the subtree rooted at ``rows``, in pre-order, filtered."""
    pairs = _pairs(n)
    stack = [(rows, start, m)]
    while stack:
        current, first, edges = stack.pop()
        graph = Graph(n, current)
        if constraints.accepts(graph):
            yield current
        if constraints.exhausted(edges):
            continue
        children = list(_children(current, n, first, pairs))
        for child, following in reversed(children):
            stack.append((child, following, edges + 1))


def _expand_seed(
    rows: Rows, n: int, start: int, m: int, constraints: EnumerationConstraints
) -> List[Rows]:
    return list(_subtree(rows, n, start, m, constraints))


def _plan(n: int, constraints: EnumerationConstraints):
    """
    Walks the tree down to ``SPLIT_DEPTH`` edges in pre-order.

    Yields ``("graph", rows)`` for shallow nodes that pass the constraints and
    ``("seed", (rows, start, m))`` for subtrees left to the workers.
    """
    pairs = _pairs(n)
    stack: List[Tuple[Rows, int, int]] = [((0,) * n, 0, 0)]
    while stack:
        current, first, edges = stack.pop()
        if edges == SPLIT_DEPTH:
            yield "seed", (current, first, edges)
            continue
        if constraints.accepts(Graph(n, current)):
            yield "graph", current
        if constraints.exhausted(edges):
            continue
        children = list(_children(current, n, first, pairs))
        for child, following in reversed(children):
            stack.append((child, following, edges + 1))


class EnumerationStream:
    """
    Iterates over one graph per isomorphism class of order ``n`` that meets the
    constraints. Each graph is emitted in its canonical labeling, so its key is
    its own graph6 text.

    Iteration order is the same for any number of worker processes.

    Attributes:
        n (int): The order.
        constraints (EnumerationConstraints): The filters.
        jobs (int): Worker processes used per pass.
    """

    def __init__(self, n: int, constraints: EnumerationConstraints, jobs: int = 1) -> None:
        self.n = n
        self.constraints = constraints
        self.jobs = jobs

    def __iter__(self) -> Iterator[Graph]:
        if self.jobs <= 1:
            rows_iter = _subtree((0,) * self.n, self.n, 0, 0, self.constraints)
        else:
            rows_iter = self._parallel()
        emitted = 0
        for rows in rows_iter:
            emitted += 1
            yield Graph(self.n, rows)
        logger.debug("Enumerated %d graphs of order %d (%s).", emitted, self.n, self.constraints)

    def _parallel(self) -> Iterator[Rows]:
        plan = list(_plan(self.n, self.constraints))
        seeds = [item for kind, item in plan if kind == "seed"]
        logger.info("Splitting order %d into %d subtrees over %d workers.", self.n, len(seeds), self.jobs)
        arguments = [(rows, self.n, start, m, self.constraints) for rows, start, m in seeds]
        with mp.Pool(self.jobs) as pool:
            expanded = pool.starmap(_expand_seed, arguments)
        subtrees = iter(expanded)
        for kind, item in plan:
            if kind == "graph":
                yield item
            else:
                yield from next(subtrees)

    def count(self) -> int:
        return sum(1 for _ in self)

    def __repr__(self) -> str:
        return f"EnumerationStream(n={self.n}, constraints={self.constraints}, jobs={self.jobs})"


def enumerate_graphs(
    n: int,
    constraints: Optional[EnumerationConstraints] = None,
    jobs: int = 1,
) -> EnumerationStream:
    """
    Returns a stream of all graphs of order ``n`` up to isomorphism.

    Args:
        n (int): The order, between 1 and 8.
        constraints (Optional[EnumerationConstraints]): Filters; defaults to none.
        jobs (int, optional): Worker processes. Defaults to 1.

    Raises:
        ValueError: If ``n < 1`` or ``jobs < 1``.
        ScaleError: If ``n`` exceeds the exhaustive limit.
    """
    if n < 1:
        raise ValueError(f"enumerate_graphs requires n >= 1, received {n}.")
    if n > MAX_ENUMERATION_ORDER:
        raise ScaleError(
            f"Exhaustive enumeration is limited to order {MAX_ENUMERATION_ORDER}, received {n}."
        )
    if jobs < 1:
        raise ValueError(f"jobs expected greater than 0, received {jobs}.")
    return EnumerationStream(n, constraints or EnumerationConstraints(), jobs)
