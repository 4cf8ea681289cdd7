"""
This module assembles the adjacency and signless Laplacian matrices of a graph,
as floating-point arrays for the eigensolver and as integer rows for exact
polynomial arithmetic.
"""

from typing import List

import numpy as np

from ..graphs import Graph
from .polynomials import Polynomial, characteristic_polynomial


def adjacency_rows(graph: Graph) -> List[List[int]]:
    return [[(row >> w) & 1 for w in range(graph.n)] for row in graph.rows]


def signless_laplacian_rows(graph: Graph) -> List[List[int]]:
    """Q(G) = D(G) + A(G) as integer rows."""
    rows = adjacency_rows(graph)
    for v, degree in enumerate(graph.degrees()):
        rows[v][v] = degree
    return rows


def adjacency_matrix(graph: Graph) -> np.ndarray:
    return np.array(adjacency_rows(graph), dtype=float)


def signless_laplacian(graph: Graph) -> np.ndarray:
    """
    Returns Q(G) = D(G) + A(G) as a symmetric float array.

    Row sums equal twice the degrees.
    """
    return np.array(signless_laplacian_rows(graph), dtype=float)


def signless_characteristic_polynomial(graph: Graph) -> Polynomial:
    """Integer coefficients of det(xI - Q(G))."""
    return characteristic_polynomial(signless_laplacian_rows(graph))


def adjacency_characteristic_polynomial(graph: Graph) -> Polynomial:
    return characteristic_polynomial(adjacency_rows(graph))
