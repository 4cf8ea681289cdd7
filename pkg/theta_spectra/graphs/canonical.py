"""
This module computes exact canonical forms of small graphs.

The canonical form of a graph is the relabeling whose upper-triangle adjacency
string, read column by column (x01, x02, x12, x03, ...), is lexicographically
greatest. That string is exactly the bit order of graph6, so the key is stored
as the graph6 text of the canonical relabeling. Maximal strings have the prefix
property used by orderly generation: clearing the last 1-bit of a canonical
string yields a canonical string.

Classes:
    - CanonicalKey: An isomorphism-invariant key of a graph.
    - ScaleError: Raised when an order exceeds an exact engine's limit.

Functions:
    - canonical_key: Returns the CanonicalKey of a graph.
    - canonical_form: Returns the canonically relabeled graph.
    - is_canonical: Checks whether a graph is its own canonical form.
"""

from typing import List, Optional, Sequence

from ..config import MAX_CANONICAL_ORDER
from .graph import Graph, _bits
from .graph6 import encode_graph6


class ScaleError(ValueError):
    """Raised when a requested order exceeds the limit of an exact engine."""


class CanonicalKey:
    """
    Represents the isomorphism class of a graph.

    Two graphs have equal keys iff they are isomorphic. Keys order like the
    adjacency strings they encode, so ``max`` over keys of one order is the
    lexicographically greatest class.

    Attributes:
        graph6 (str): graph6 text of the canonical relabeling.
    """

    __slots__ = ("_graph6",)

    def __init__(self, graph6: str) -> None:
        object.__setattr__(self, "_graph6", graph6)

    @property
    def graph6(self) -> str:
        return self._graph6

    @property
    def bytes(self) -> bytes:
        return self._graph6.encode("ascii")

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalKey) and self._graph6 == other.graph6

    def __lt__(self, other: "CanonicalKey") -> bool:
        return (len(self._graph6), self._graph6) < (len(other.graph6), other.graph6)

    def __hash__(self) -> int:
        return hash(self._graph6)

    def __setattr__(self, name, value) -> None:
        raise AttributeError("CanonicalKey is immutable.")

    def __reduce__(self):
        return (CanonicalKey, (self._graph6,))

    def __repr__(self) -> str:
        return f"CanonicalKey('{self._graph6}')"

    def __str__(self) -> str:
        return self._graph6


def _twin_classes(rows: Sequence[int], n: int) -> List[int]:
    """Labels each vertex with the smallest vertex sharing its neighbourhood up to each other."""
    label = list(range(n))
    for v in range(n):
        if label[v] != v:
            continue
        for w in range(v + 1, n):
            if label[w] == w and rows[v] & ~(1 << w) == rows[w] & ~(1 << v):
                label[w] = v
    return label


def _own_columns(rows: Sequence[int], n: int) -> List[int]:
    columns = [0] * n
    for j in range(1, n):
        column = 0
        for i in range(j):
            column = (column << 1) | ((rows[i] >> j) & 1)
        columns[j] = column
    return columns


def _extend(rows: Sequence[int], columns: List[int], v: int, rest: int) -> List[int]:
    extended = list(columns)
    row = rows[v]
    for w in _bits(rest):
        extended[w] = (columns[w] << 1) | ((row >> w) & 1)
    return extended


def _maximal_order(rows: Sequence[int], n: int) -> List[int]:
    """
    Returns the vertex placed at each position of the maximal relabeling.

    Branches only on vertices whose column towards the placed prefix is the
    largest available, and on one vertex per twin class, since swapping twins is
    an automorphism that fixes the prefix.
    """
    twins = _twin_classes(rows, n)
    best: Optional[List[int]] = None
    best_order: List[int] = []
    prefix: List[int] = []
    order: List[int] = []

    def explore(columns: List[int], remaining: int) -> None:
        nonlocal best, best_order
        if not remaining:
            if best is None or prefix > best:
                best = list(prefix)
                best_order = list(order)
            return
        top = max(columns[v] for v in _bits(remaining))
        if best is not None and prefix + [top] < best[: len(prefix) + 1]:
            return
        tried = set()
        for v in _bits(remaining):
            if columns[v] != top or twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = remaining & ~(1 << v)
            prefix.append(top)
            order.append(v)
            explore(_extend(rows, columns, v, rest), rest)
            prefix.pop()
            order.pop()

    explore([0] * n, (1 << n) - 1)
    return best_order


def has_greater_relabeling(rows: Sequence[int], n: int) -> bool:
    """
    Checks whether some relabeling gives a greater adjacency string.

    This is the orderly-generation test; it stops at the first greater
    prefix and never builds the maximum itself.
    """
    twins = _twin_classes(rows, n)
    own = _own_columns(rows, n)

    def explore(depth: int, columns: List[int], remaining: int) -> bool:
        if not remaining:
            return False
        target = own[depth]
        top = max(columns[v] for v in _bits(remaining))
        if top > target:
            return True
        if top < target:
            return False
        tried = set()
        for v in _bits(remaining):
            if columns[v] != target or twins[v] in tried:
                continue
            tried.add(twins[v])
            rest = remaining & ~(1 << v)
            if explore(depth + 1, _extend(rows, columns, v, rest), rest):
                return True
        return False

    return explore(0, [0] * n, (1 << n) - 1)


def _check_scale(graph: Graph) -> None:
    if graph.n > MAX_CANONICAL_ORDER:
        raise ScaleError(
            f"Exact canonical forms are limited to order {MAX_CANONICAL_ORDER}, "
            f"received order {graph.n}."
        )


def canonical_form(graph: Graph) -> Graph:
    """
    Returns the canonical relabeling of ``graph``.

    Raises:
        ScaleError: If the order exceeds the exact search limit.
    """
    _check_scale(graph)
    order = _maximal_order(graph.rows, graph.n)
    position = [0] * graph.n
    for new, old in enumerate(order):
        position[old] = new
    return graph.relabel(position)


def canonical_key(graph: Graph) -> CanonicalKey:
    """
    Returns the isomorphism-invariant key of ``graph``.

    Raises:
        ScaleError: If the order exceeds the exact search limit.
    """
    return CanonicalKey(encode_graph6(canonical_form(graph)))


def is_canonical(graph: Graph) -> bool:
    """True iff ``graph`` already is its canonical form, i.e. its own key."""
    _check_scale(graph)
    return not has_greater_relabeling(graph.rows, graph.n)


def key_of_canonical(graph: Graph) -> CanonicalKey:
    """Returns the key of a graph known to be canonical, without searching."""
    return CanonicalKey(encode_graph6(graph))
