"""
This module builds the named graph families with fixed, documented labelings.

Hubs, poles and apexes always get the lowest labels so canonical keys and
fixtures stay stable.

Classes:
    - Family: The named families.
    - FamilySpec: A family plus its integer parameters.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Sequence, Tuple

from .graph import Graph, complete, cycle, empty, path, star


def friendship(n: int) -> Graph:
    """
    F_n: (n-1)/2 triangles through vertex 0 for odd n; for even n, F_{n-1}
    with a pendant vertex n-1 hung on vertex 0.

    Raises:
        ValueError: If ``n < 3``.
    """
    if n < 3:
        raise ValueError(f"friendship(n) requires n >= 3, received {n}.")
    odd = n if n % 2 == 1 else n - 1
    edges = []
    for a in range(1, odd, 2):
        edges += [(0, a), (0, a + 1), (a, a + 1)]
    if n % 2 == 0:
        edges.append((0, n - 1))
    return Graph.from_edges(n, edges)


def split_star(n: int, k: int) -> Graph:
    """
    S_{n,k}: a clique on 0..k-1 joined to the independent vertices k..n-1.

    Raises:
        ValueError: Unless ``1 <= k <= n-2``.
    """
    if not (1 <= k <= n - 2):
        raise ValueError(f"split_star(n, k) requires 1 <= k <= n-2, received n={n}, k={k}.")
    return complete(k).join(empty(n - k))


def split_star_plus(n: int, k: int) -> Graph:
    """
    S_{n,k}^+: S_{n,k} plus the edge {k, k+1} between two independent vertices.

    Raises:
        ValueError: Unless ``k >= 1`` and ``n - k >= 2``.
    """
    if k < 1 or n - k < 2:
        raise ValueError(
            f"split_star_plus(n, k) requires k >= 1 and n-k >= 2, received n={n}, k={k}."
        )
    return complete(k).join(empty(n - k)).add_edge(k, k + 1)


def generalized_theta(lengths: Sequence[int]) -> Graph:
    """
    Joins poles 0 and 1 by internally disjoint paths of the given lengths.

    Lengths are sorted ascending; internal vertices are numbered from 2 along
    each path in turn, from pole 0 towards pole 1.

    Raises:
        ValueError: If fewer than two paths are given, a length is below 1, or
            more than one length equals 1.
    """
    lengths = sorted(lengths)
    if len(lengths) < 2:
        raise ValueError(f"A theta graph needs at least two paths, received {lengths}.")
    if lengths[0] < 1:
        raise ValueError(f"Path lengths must be at least 1, received {lengths}.")
    if lengths[1] < 2:
        raise ValueError(f"At most one path may have length 1, received {lengths}.")
    n = 2 + sum(length - 1 for length in lengths)
    edges = []
    next_vertex = 2
    for length in lengths:
        previous = 0
        for _ in range(length - 1):
            edges.append((previous, next_vertex))
            previous = next_vertex
            next_vertex += 1
        edges.append((previous, 1))
    return Graph.from_edges(n, edges)


def theta(l1: int, l2: int, l3: int) -> Graph:
    """θ(l1, l2, l3), see ``generalized_theta``."""
    return generalized_theta([l1, l2, l3])


def h_graph(n: int, k: int) -> Graph:
    """
    H_{n,k}: the star K_{1,n-1} on hub 0 plus edges from leaf 1 to leaves 2..k+2.

    Raises:
        ValueError: Unless ``3 <= k <= n-3``.
    """
    if not (3 <= k <= n - 3):
        raise ValueError(f"h_graph(n, k) requires 3 <= k <= n-3, received n={n}, k={k}.")
    edges = [(0, v) for v in range(1, n)]
    edges += [(1, v) for v in range(2, k + 3)]
    return Graph.from_edges(n, edges)


def cone_over_triangles(n: int) -> Graph:
    """
    K_1 ∨ ((n-1)/3)K_3 with apex 0 and triangles {1,2,3}, {4,5,6}, ...

    Raises:
        ValueError: Unless ``n ≡ 1 (mod 3)`` and ``n >= 4``.
    """
    if n < 4 or n % 3 != 1:
        raise ValueError(f"cone_over_triangles(n) requires n ≡ 1 (mod 3), n >= 4, received {n}.")
    triangles = complete(3)
    for _ in range((n - 1) // 3 - 1):
        triangles = triangles.disjoint_union(complete(3))
    return empty(1).join(triangles)


def _neighborhood_witness(n: int, matching: List[Tuple[int, int]], outside: List[int]) -> Graph:
    """Hub 0 adjacent to 1..n-2, ``matching`` inside N(0), vertex n-1 adjacent to ``outside``."""
    edges = [(0, v) for v in range(1, n - 1)]
    edges += matching
    edges += [(v, n - 1) for v in outside]
    return Graph.from_edges(n, edges)


def witness_g1(n: int) -> Graph:
    """
    Odd n: N(0) = {1..n-2} induces the matching {1,2}, {3,4}, ..., {n-4,n-3} plus
    the isolated vertex n-2; vertex n-1 sees the lower end of each matching edge
    and n-2, i.e. (n-1)/2 vertices.

    Raises:
        ValueError: Unless ``n`` is odd and ``n >= 7``.
    """
    if n < 7 or n % 2 == 0:
        raise ValueError(f"witness_g1(n) requires odd n >= 7, received {n}.")
    lows = list(range(1, n - 3, 2))
    return _neighborhood_witness(n, [(a, a + 1) for a in lows], lows + [n - 2])


def witness_g2(n: int) -> Graph:
    """
    Even n: N(0) = {1..n-2} induces a perfect matching {1,2}, {3,4}, ...; vertex
    n-1 sees the lower end of each matching edge, i.e. (n-2)/2 vertices.

    Raises:
        ValueError: Unless ``n`` is even and ``n >= 6``.
    """
    if n < 6 or n % 2 == 1:
        raise ValueError(f"witness_g2(n) requires even n >= 6, received {n}.")
    lows = list(range(1, n - 2, 2))
    return _neighborhood_witness(n, [(a, a + 1) for a in lows], lows)


def witness_g3(n: int) -> Graph:
    """
    N(0) = {1..n-2} induces the single edge {1,2}; vertex n-1 sees 1 and 3..n-2,
    i.e. n-3 vertices of N(0).

    Raises:
        ValueError: If ``n < 6``.
    """
    if n < 6:
        raise ValueError(f"witness_g3(n) requires n >= 6, received {n}.")
    return _neighborhood_witness(n, [(1, 2)], [1] + list(range(3, n - 1)))


class Family(Enum):
    FRIENDSHIP = "friendship"
    SPLIT_STAR = "split-star"
    SPLIT_STAR_PLUS = "split-star-plus"
    THETA = "theta"
    GENERALIZED_THETA = "generalized-theta"
    H_GRAPH = "h-graph"
    CONE_OVER_TRIANGLES = "cone-over-triangles"
    WITNESS_G1 = "witness-g1"
    WITNESS_G2 = "witness-g2"
    WITNESS_G3 = "witness-g3"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"


_BUILDERS: Dict[Family, Tuple[int, Callable[..., Graph]]] = {
    Family.FRIENDSHIP: (1, friendship),
    Family.SPLIT_STAR: (2, split_star),
    Family.SPLIT_STAR_PLUS: (2, split_star_plus),
    Family.THETA: (3, theta),
    Family.GENERALIZED_THETA: (-1, lambda *lengths: generalized_theta(lengths)),
    Family.H_GRAPH: (2, h_graph),
    Family.CONE_OVER_TRIANGLES: (1, cone_over_triangles),
    Family.WITNESS_G1: (1, witness_g1),
    Family.WITNESS_G2: (1, witness_g2),
    Family.WITNESS_G3: (1, witness_g3),
    Family.PATH: (1, path),
    Family.CYCLE: (1, cycle),
    Family.COMPLETE: (1, complete),
    Family.STAR: (1, star),
}


@dataclass(frozen=True)
class FamilySpec:
    """
    Names a family member by family and integer parameters.

    Attributes:
        family (Family): The family.
        params (Tuple[int, ...]): Parameters in the order of the family's builder,
            e.g. ``(n, k)`` for split stars or the path lengths for theta graphs.
    """

    family: Family
    params: Tuple[int, ...]

    def __post_init__(self) -> None:
        arity, _ = _BUILDERS[self.family]
        if arity >= 0 and len(self.params) != arity:
            raise ValueError(
                f"Family '{self.family.value}' takes {arity} parameter(s), "
                f"received {list(self.params)}."
            )
        if arity < 0 and not self.params:
            raise ValueError(f"Family '{self.family.value}' needs at least one parameter.")

    @classmethod
    def parse(cls, name: str, params: Sequence[int]) -> "FamilySpec":
        try:
            family = Family(name)
        except ValueError:
            known = ", ".join(f.value for f in Family)
            raise ValueError(f"Unknown family '{name}'. Known families: {known}.") from None
        return cls(family, tuple(params))

    def build(self) -> Graph:
        _, builder = _BUILDERS[self.family]
        return builder(*self.params)

    def __str__(self) -> str:
        return f"{self.family.value}({', '.join(str(p) for p in self.params)})"
