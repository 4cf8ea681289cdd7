"""
This module provides the degree-based upper bounds on q(G) and the
neighbourhood edge counts they are built from.

The degree pressure of u is d(u) + (1/d(u)) * sum of d(w) over w in N(u). The
largest pressure bounds q(G) from above, with equality exactly for regular and
semi-regular bipartite connected graphs, and is itself bounded by
2m/(n-1) + n - 2.
"""

from fractions import Fraction
from typing import NamedTuple, Tuple

from ..config import TIE_BAND
from ..graphs import Graph
from .matrices import signless_characteristic_polynomial
from .polynomials import evaluate


class NeighborhoodDecomposition(NamedTuple):
    """
    Edge counts around a vertex u.

    Attributes:
        degree (int): d(u).
        inner_edges (int): e(N(u)), the edges inside the neighbourhood.
        outer_edges (int): e(N(u), N²(u)).
    """

    degree: int
    inner_edges: int
    outer_edges: int

    @property
    def neighbor_degree_sum(self) -> int:
        """The sum of d(w) over N(u), which equals d + 2 e_in + e_out."""
        return self.degree + 2 * self.inner_edges + self.outer_edges


def _require_degree(graph: Graph, u: int) -> int:
    degree = graph.degree(u)
    if degree == 0:
        raise ValueError(f"Vertex {u} is isolated; its degree pressure is undefined.")
    return degree


def neighborhood_decomposition(graph: Graph, u: int) -> NeighborhoodDecomposition:
    """
    Returns ``(d(u), e(N(u)), e(N(u), N²(u)))``.

    Raises:
        IndexError: If ``u`` is out of range.
        ValueError: If ``u`` is isolated.
    """
    degree = _require_degree(graph, u)
    neighbors = graph.neighbors(u)
    return NeighborhoodDecomposition(
        degree,
        graph.edges_within(neighbors),
        graph.edges_between(neighbors, graph.second_neighborhood(u)),
    )


def degree_pressure_exact(graph: Graph, u: int) -> Fraction:
    degree = _require_degree(graph, u)
    total = sum(graph.degree(w) for w in graph.neighbors(u))
    return degree + Fraction(total, degree)


def degree_pressure(graph: Graph, u: int) -> float:
    """
    Returns d(u) + (sum of neighbour degrees) / d(u).

    Raises:
        ValueError: If ``u`` is isolated.
    """
    return float(degree_pressure_exact(graph, u))


def max_degree_pressure_exact(graph: Graph) -> Tuple[int, Fraction]:
    if graph.has_isolated_vertex():
        raise ValueError("The maximum degree pressure needs a graph without isolated vertices.")
    best_vertex, best = 0, degree_pressure_exact(graph, 0)
    for v in range(1, graph.n):
        value = degree_pressure_exact(graph, v)
        if value > best:
            best_vertex, best = v, value
    return best_vertex, best


def max_degree_pressure(graph: Graph) -> Tuple[int, float]:
    """
    Returns the lowest-indexed vertex of largest degree pressure and that value.

    Raises:
        ValueError: If the graph has an isolated vertex.
    """
    vertex, value = max_degree_pressure_exact(graph)
    return vertex, float(value)


def das_bound_exact(graph: Graph) -> Fraction:
    if graph.n < 2:
        raise ValueError(f"das_bound requires n >= 2, received {graph.n}.")
    return Fraction(2 * graph.m, graph.n - 1) + graph.n - 2


def das_bound(graph: Graph) -> float:
    """
    Returns 2m/(n-1) + n - 2.

    Raises:
        ValueError: If ``n < 2``.
    """
    return float(das_bound_exact(graph))


def attains_pressure_bound(graph: Graph, q: float) -> bool:
    """
    Decides q(G) == max degree pressure exactly.

    Outside the tie band the answer is no; inside, the rational pressure must be
    a root of the characteristic polynomial of Q(G).
    """
    _, pressure = max_degree_pressure_exact(graph)
    if abs(float(pressure) - q) > TIE_BAND:
        return False
    return evaluate(signless_characteristic_polynomial(graph), pressure) == 0
