"""
This module defines forbidden patterns and parses their command-line literals.

Literals:
    - ``theta-a-b-c[-d...]``: the generalized theta graph with those path lengths.
    - ``f<n>``: the friendship graph F_n for odd n >= 3, e.g. ``f5``.
    - ``p<k>``: the path on k >= 2 vertices.
    - ``k<k>``: the complete graph on k >= 2 vertices.

Classes:
    - Pattern: A named graph without isolated vertices.
"""

import re
from dataclasses import dataclass
from typing import List, Tuple

from ..graphs import Graph, complete, friendship, generalized_theta, path


@dataclass(frozen=True)
class Pattern:
    """
    A forbidden subgraph H.

    Attributes:
        name (str): The literal naming the pattern, e.g. ``theta-1-2-2``.
        target (Graph): The pattern graph.

    Raises:
        ValueError: If the target has an isolated vertex.
    """

    name: str
    target: Graph

    def __post_init__(self) -> None:
        if self.target.has_isolated_vertex():
            raise ValueError(f"Pattern '{self.name}' has an isolated vertex.")

    def __str__(self) -> str:
        return self.name


_THETA = re.compile(r"theta((?:-\d+){2,})")
_SIMPLE = re.compile(r"([fpk])(\d+)")


def parse_pattern(literal: str) -> Pattern:
    """
    Parses one pattern literal.

    Raises:
        ValueError: If the literal is unknown or its parameters are out of range.
    """
    text = literal.strip().lower()
    match = _THETA.fullmatch(text)
    if match:
        lengths = [int(part) for part in match.group(1).split("-")[1:]]
        name = "theta-" + "-".join(str(length) for length in sorted(lengths))
        return Pattern(name, generalized_theta(lengths))
    match = _SIMPLE.fullmatch(text)
    if not match:
        raise ValueError(
            f"Unknown pattern '{literal}'; expected theta-a-b-c, f<odd n>, p<k> or k<k>."
        )
    kind, size = match.group(1), int(match.group(2))
    if kind == "f":
        if size < 3 or size % 2 == 0:
            raise ValueError(f"Friendship patterns need an odd order >= 3, received '{literal}'.")
        return Pattern(text, friendship(size))
    if size < 2:
        raise ValueError(f"Pattern '{literal}' needs at least 2 vertices.")
    return Pattern(text, path(size) if kind == "p" else complete(size))


def parse_patterns(text: str) -> Tuple[Pattern, ...]:
    """Parses a comma-separated list of literals, e.g. ``theta-1-2-2,f5``."""
    literals: List[str] = [part for part in text.split(",") if part.strip()]
    if not literals:
        raise ValueError("Expected at least one pattern literal.")
    return tuple(parse_pattern(literal) for literal in literals)


THETA_122 = parse_pattern("theta-1-2-2")
THETA_123 = parse_pattern("theta-1-2-3")
F5 = parse_pattern("f5")
