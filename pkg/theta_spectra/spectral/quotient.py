"""
This module builds quotient matrices of equitable vertex partitions.

A partition V = V_1 ∪ ... ∪ V_k is equitable when every vertex of V_i has the
same number b_ij of neighbours in V_j. The quotient's characteristic
polynomial divides that of the graph and its largest eigenvalue is the
spectral radius, which lets a k×k matrix stand in for an n×n one.

Classes:
    - QuotientMode: Which matrix the quotient represents.
    - QuotientMatrix: The k×k quotient with its partition.
    - NonEquitablePartitionError: Raised with a witness when the partition is not equitable.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..graphs import Graph, VertexSet
from .matrices import adjacency_characteristic_polynomial, signless_characteristic_polynomial
from .polynomials import Polynomial, characteristic_polynomial, largest_real_root, polynomial_divides


class QuotientMode(Enum):
    ADJACENCY = "adjacency"
    SIGNLESS_LAPLACIAN = "signless_laplacian"


class NonEquitablePartitionError(ValueError):
    """
    Raised when two vertices of one block see different numbers of neighbours in a block.

    Attributes:
        witness (Optional[Tuple[int, int, int]]): ``(u, v, block)``; None when the
            partition is not a disjoint cover at all.
    """

    def __init__(self, message: str, witness: Optional[Tuple[int, int, int]] = None) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class QuotientMatrix:
    """
    Attributes:
        b (Tuple[Tuple[int, ...], ...]): The integer quotient matrix.
        partition (Tuple[VertexSet, ...]): The blocks, in row order.
        mode (QuotientMode): Adjacency or signless Laplacian.
    """

    b: Tuple[Tuple[int, ...], ...]
    partition: Tuple[VertexSet, ...]
    mode: QuotientMode

    @property
    def k(self) -> int:
        return len(self.b)

    def as_array(self) -> np.ndarray:
        return np.array(self.b, dtype=float)

    def characteristic_polynomial(self) -> Polynomial:
        return characteristic_polynomial(self.b)

    def largest_eigenvalue(self) -> float:
        return largest_eigenvalue_small(self.b)


def _check_cover(graph: Graph, partition: Sequence[VertexSet]) -> None:
    if not partition:
        raise NonEquitablePartitionError("The partition has no blocks.")
    covered = 0
    for index, block in enumerate(partition):
        if not isinstance(block, VertexSet) or block.n != graph.n:
            raise NonEquitablePartitionError(f"Block {index} is not a vertex set of order {graph.n}.")
        if not block:
            raise NonEquitablePartitionError(f"Block {index} is empty.")
        if covered & block.mask:
            raise NonEquitablePartitionError(f"Block {index} overlaps an earlier block.")
        covered |= block.mask
    if covered != (1 << graph.n) - 1:
        missing = VertexSet(graph.n, ((1 << graph.n) - 1) & ~covered)
        raise NonEquitablePartitionError(f"The partition does not cover vertices {missing}.")


def quotient_matrix(
    graph: Graph,
    partition: Sequence[VertexSet],
    mode: QuotientMode = QuotientMode.ADJACENCY,
) -> QuotientMatrix:
    """
    Returns the quotient matrix of an equitable partition.

    In signless Laplacian mode the common degree of each block is added to its
    diagonal entry.

    Raises:
        NonEquitablePartitionError: If the blocks are not a disjoint cover, or
            some block is not equitable; the error carries a witness pair.
    """
    _check_cover(graph, partition)
    rows: List[Tuple[int, ...]] = []
    for i, block in enumerate(partition):
        first = next(iter(block))
        counts = tuple(len(graph.neighbors(first).intersection(other)) for other in partition)
        for v in block:
            for j, other in enumerate(partition):
                if len(graph.neighbors(v).intersection(other)) != counts[j]:
                    raise NonEquitablePartitionError(
                        f"Vertices {first} and {v} of block {i} have different "
                        f"numbers of neighbours in block {j}.",
                        (first, v, j),
                    )
        if mode is QuotientMode.SIGNLESS_LAPLACIAN:
            counts = tuple(c + (graph.degree(first) if j == i else 0) for j, c in enumerate(counts))
        rows.append(counts)
    return QuotientMatrix(tuple(rows), tuple(partition), mode)


def largest_eigenvalue_small(b: Sequence[Sequence[float]]) -> float:
    """
    Largest eigenvalue of a real matrix of order at most 4 with real spectrum,
    such as a quotient matrix, from its exact characteristic polynomial.

    Raises:
        ValueError: If the matrix is larger than 4×4.
    """
    if len(b) > 4:
        raise ValueError(f"largest_eigenvalue_small handles k <= 4, received k = {len(b)}.")
    return largest_real_root(characteristic_polynomial(b))


def quotient_divides_spectrum(
    graph: Graph,
    partition: Sequence[VertexSet],
    mode: QuotientMode = QuotientMode.ADJACENCY,
) -> bool:
    """
    True iff det(xI - B) divides det(xI - M), where M is A(G) or Q(G) per ``mode``.

    Raises:
        NonEquitablePartitionError: As for ``quotient_matrix``.
    """
    quotient = quotient_matrix(graph, partition, mode)
    if mode is QuotientMode.ADJACENCY:
        full = adjacency_characteristic_polynomial(graph)
    else:
        full = signless_characteristic_polynomial(graph)
    return polynomial_divides(quotient.characteristic_polynomial(), full)
