"""
This module provides the bit-set representation of vertex subsets.

Classes:
    - VertexSet: An immutable subset of {0, ..., n-1} stored as an integer bit mask.
"""

from typing import Iterable, Iterator


class VertexSet:
    """
    Represents an immutable set of vertices of a graph of order ``n``.

    Bit ``v`` of ``mask`` is set iff vertex ``v`` is a member.

    Attributes:
        n (int): The order of the graph the set belongs to.
        mask (int): The membership bit mask.
    """

    __slots__ = ("_n", "_mask")

    def __init__(self, n: int, mask: int = 0) -> None:
        """
        Initializes a vertex set.

        Args:
            n (int): Order of the ambient graph.
            mask (int, optional): Membership bit mask. Defaults to the empty set.

        Raises:
            ValueError: If ``mask`` has bits outside ``0..n-1``.
        """
        if n < 0:
            raise ValueError(f"`n` expected non-negative, received {n}.")
        if mask < 0 or mask >> n:
            raise ValueError(
                f"Mask {mask:#x} has members outside 0..{n - 1}."
            )
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_mask", mask)

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        """
        Builds a vertex set from an iterable of vertex indices.

        Raises:
            IndexError: If any vertex is outside ``0..n-1``.
        """
        mask = 0
        for v in vertices:
            if not (0 <= v < n):
                raise IndexError(f"Vertex {v} out of range for graph of order {n}.")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def n(self) -> int:
        return self._n

    @property
    def mask(self) -> int:
        return self._mask

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self._n, self._mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self._n, self._mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self._n, self._mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self._n, ((1 << self._n) - 1) & ~self._mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_compatible(other)
        return self._mask & other.mask == 0

    def _check_compatible(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet) or other.n != self._n:
            raise ValueError(
                f"Cannot combine a vertex set of order {self._n} with {other!r}."
            )

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self._n and (self._mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return bin(self._mask).count("1")

    def __bool__(self) -> bool:
        return self._mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self._n == other.n
            and self._mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self._n, self._mask))

    def __setattr__(self, name, value) -> None:
        raise AttributeError("VertexSet is immutable.")

    def __reduce__(self):
        return (VertexSet, (self._n, self._mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self._n}, members={list(self)})"

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"
