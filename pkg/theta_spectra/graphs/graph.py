"""
This module provides the immutable simple-graph value type used throughout the
package.

Classes:
    - Graph: A simple undirected graph on vertices 0..n-1 with bit-set adjacency rows.
"""

import operator
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from ..config import MAX_ORDER
from .vertex_set import VertexSet


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """
    Represents a simple undirected graph with vertices labeled ``0..n-1``.

    Row ``v`` of the adjacency is an integer whose bit ``w`` is set iff ``vw`` is
    an edge. Graphs are values: every "mutation" returns a new graph.

    Attributes:
        n (int): The number of vertices.
        rows (Tuple[int, ...]): Adjacency rows as bit masks.
    """

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int] = ()) -> None:
        """
        Initializes a graph from its adjacency rows.

        Args:
            n (int): Order of the graph, between 1 and 64.
            rows (Sequence[int], optional): Adjacency bit masks, a list, tuple or
                integer array. Defaults to no edges.

        Raises:
            ValueError: If ``n`` is out of range, or the rows describe loops,
                asymmetric adjacency, or vertices outside ``0..n-1``.
            TypeError: If a row is not an integer.
        """
        if not (1 <= n <= MAX_ORDER):
            raise ValueError(
                f"Graph order must be between 1 and {MAX_ORDER}, received {n}."
            )
        rows = tuple(operator.index(row) for row in rows) if len(rows) else (0,) * n
        if len(rows) != n:
            raise ValueError(f"Expected {n} adjacency rows, received {len(rows)}.")
        for v, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"Row {v} has neighbours outside 0..{n - 1}.")
            if (row >> v) & 1:
                raise ValueError(f"Loop at vertex {v}; only simple graphs are allowed.")
            for w in _bits(row):
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"Adjacency is not symmetric at ({v}, {w}).")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_m", sum(_popcount(r) for r in rows) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Builds a graph from an edge list.

        Raises:
            IndexError: If an endpoint is outside ``0..n-1``.
            ValueError: If an edge is a loop.
        """
        if not (1 <= n <= MAX_ORDER):
            raise ValueError(
                f"Graph order must be between 1 and {MAX_ORDER}, received {n}."
            )
        rows = [0] * n
        for u, v in edges:
            for x in (u, v):
                if not (0 <= x < n):
                    raise IndexError(f"Vertex {x} out of range for graph of order {n}.")
            if u == v:
                raise ValueError(f"Loop at vertex {u}; only simple graphs are allowed.")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Converts a networkx graph, labeling vertices in node iteration order."""
        index = {node: i for i, node in enumerate(graph.nodes)}
        return cls.from_edges(
            len(index), ((index[u], index[v]) for u, v in graph.edges)
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        """The number of edges."""
        return self._m

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self._n)

    def _validate_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise IndexError(
                f"Vertex {v} out of range for graph of order {self._n}."
            )

    def _validate_set(self, s: VertexSet) -> None:
        if not isinstance(s, VertexSet) or s.n != self._n:
            raise ValueError(
                f"Expected a VertexSet of order {self._n}, received {s!r}."
            )

    def has_edge(self, u: int, v: int) -> bool:
        self._validate_vertex(u)
        self._validate_vertex(v)
        return (self._rows[u] >> v) & 1 == 1

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yields each edge once as ``(u, v)`` with ``u < v``, in row order."""
        for u, row in enumerate(self._rows):
            for v in _bits(row >> (u + 1) << (u + 1)):
                yield (u, v)

    def degree(self, v: int) -> int:
        """
        Returns the degree of ``v``.

        Raises:
            IndexError: If ``v`` is out of range.
        """
        self._validate_vertex(v)
        return _popcount(self._rows[v])

    def degrees(self) -> List[int]:
        return [_popcount(row) for row in self._rows]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    def neighbors(self, v: int) -> VertexSet:
        self._validate_vertex(v)
        return VertexSet(self._n, self._rows[v])

    def second_neighborhood(self, u: int) -> VertexSet:
        """
        Returns the vertices at distance exactly two from ``u``.

        Raises:
            IndexError: If ``u`` is out of range.
        """
        self._validate_vertex(u)
        reach = 0
        for w in _bits(self._rows[u]):
            reach |= self._rows[w]
        return VertexSet(self._n, reach & ~self._rows[u] & ~(1 << u))

    def edges_within(self, s: VertexSet) -> int:
        """Returns the number of edges with both ends in ``s``."""
        self._validate_set(s)
        return sum(_popcount(self._rows[v] & s.mask) for v in s) // 2

    def edges_between(self, x: VertexSet, y: VertexSet) -> int:
        """
        Returns the number of edges with one end in ``x`` and the other in ``y``.

        Raises:
            ValueError: If ``x`` and ``y`` overlap.
        """
        self._validate_set(x)
        self._validate_set(y)
        if not x.isdisjoint(y):
            raise ValueError(
                f"Vertex sets must be disjoint, both contain {x.intersection(y)}."
            )
        return sum(_popcount(self._rows[v] & y.mask) for v in x)

    def induced_subgraph(self, s: VertexSet) -> "Graph":
        """
        Returns G[S], relabeled ``0..|S|-1`` in ascending original order.

        Raises:
            ValueError: If ``s`` is empty.
        """
        self._validate_set(s)
        if not s:
            raise ValueError("Cannot induce a subgraph on an empty vertex set.")
        members = list(s)
        position = {v: i for i, v in enumerate(members)}
        rows = []
        for v in members:
            row = 0
            for w in _bits(self._rows[v] & s.mask):
                row |= 1 << position[w]
            rows.append(row)
        return Graph(len(members), rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        return self._toggled(u, v, present=True)

    def remove_edge(self, u: int, v: int) -> "Graph":
        return self._toggled(u, v, present=False)

    def _toggled(self, u: int, v: int, present: bool) -> "Graph":
        self._validate_vertex(u)
        self._validate_vertex(v)
        if u == v:
            raise ValueError(f"Loop at vertex {u}; only simple graphs are allowed.")
        if self.has_edge(u, v) == present:
            state = "already" if present else "not"
            raise ValueError(f"Edge ({u}, {v}) is {state} present.")
        rows = list(self._rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph(self._n, rows)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Returns the graph with vertex ``v`` renamed to ``permutation[v]``.

        Raises:
            ValueError: If ``permutation`` is not a permutation of ``0..n-1``.
        """
        if sorted(permutation) != list(range(self._n)):
            raise ValueError(f"{list(permutation)} is not a permutation of 0..{self._n - 1}.")
        return Graph.from_edges(
            self._n, ((permutation[u], permutation[v]) for u, v in self.edges())
        )

    def join(self, other: "Graph") -> "Graph":
        """Returns G ∨ H: the disjoint union plus every edge between G and H."""
        return self._combine(other, joined=True)

    def disjoint_union(self, other: "Graph") -> "Graph":
        return self._combine(other, joined=False)

    def _combine(self, other: "Graph", joined: bool) -> "Graph":
        n = self._n + other.n
        if n > MAX_ORDER:
            raise ValueError(
                f"Combined order {n} exceeds the capacity of {MAX_ORDER} vertices."
            )
        low = (1 << self._n) - 1
        high = ((1 << other.n) - 1) << self._n
        rows = [row | (high if joined else 0) for row in self._rows]
        rows += [(row << self._n) | (low if joined else 0) for row in other.rows]
        return Graph(n, rows)

    def components(self) -> List[VertexSet]:
        """Returns the connected components, ordered by their smallest vertex."""
        remaining = (1 << self._n) - 1
        parts = []
        while remaining:
            seen = remaining & -remaining
            frontier = seen
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self._rows[v]
                frontier = reach & ~seen
                seen |= frontier
            parts.append(VertexSet(self._n, seen))
            remaining &= ~seen
        return parts

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self._rows)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def bipartition(self) -> Tuple[VertexSet, VertexSet]:
        """
        Returns a 2-colouring ``(X, Y)``, the smallest vertex of each component in ``X``.

        Raises:
            ValueError: If the graph has an odd cycle.
        """
        colour = [-1] * self._n
        for v in range(self._n):
            if colour[v] != -1:
                continue
            colour[v] = 0
            stack = [v]
            while stack:
                x = stack.pop()
                for w in _bits(self._rows[x]):
                    if colour[w] == -1:
                        colour[w] = 1 - colour[x]
                        stack.append(w)
                    elif colour[w] == colour[x]:
                        raise ValueError("Graph is not bipartite.")
        side = VertexSet.of(self._n, (v for v in range(self._n) if colour[v] == 0))
        return side, side.complement()

    def is_bipartite(self) -> bool:
        try:
            self.bipartition()
        except ValueError:
            return False
        return True

    def is_semiregular_bipartite(self) -> bool:
        """True iff the graph is connected, bipartite and degree-constant on each side."""
        if not self.is_connected() or not self.is_bipartite():
            return False
        degrees = self.degrees()
        return all(
            len({degrees[v] for v in side}) <= 1 for side in self.bipartition()
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other.n
            and self._rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __setattr__(self, name, value) -> None:
        raise AttributeError("Graph is immutable; build a new graph instead.")

    def __reduce__(self):
        return (Graph, (self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m}, edges={list(self.edges())})"

    def __str__(self) -> str:
        return f"Graph on {self._n} vertices with {self._m} edges"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    """The path v0 v1 ... v(n-1)."""
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, received {n}.")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise ValueError(f"A star needs at least 2 vertices, received {n}.")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))
