"""
This module reads and writes the graph6 text encoding of simple graphs.

Encoding and decoding go through networkx. The upper triangle is listed column
by column (x01, x02, x12, x03, ...), which is the order canonical keys compare.
Decoding is strict: text that networkx accepts but would not write itself,
such as non-zero padding bits, is rejected.

Classes:
    - Graph6Error: Raised for malformed graph6 text.

Functions:
    - encode_graph6: Encodes a Graph.
    - decode_graph6: Decodes one graph6 line.
    - read_graph6: Iterates over a stream of graph6 lines.
    - write_graph6: Writes graphs to a stream, one per line.
"""

from typing import Callable, Iterable, Iterator, Optional, TextIO, Tuple

import networkx as nx

from ..config import MAX_ORDER
from .graph import Graph

HEADER = ">>graph6<<"
_FIRST = 63
_LAST = 126
# Four order bytes and the data bytes of the largest supported order.
_MAX_LENGTH = 4 + (MAX_ORDER * (MAX_ORDER - 1) // 2 + 5) // 6


class Graph6Error(ValueError):
    """
    Raised when graph6 text is malformed.

    Attributes:
        line_number (Optional[int]): 1-based line of the offending text, if known.
    """

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


def encode_graph6(graph: Graph) -> str:
    """Returns the graph6 text of ``graph``, without header or newline."""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").rstrip("\n")


def decode_graph6(text: str) -> Graph:
    """
    Decodes a single graph6 string.

    A leading ``>>graph6<<`` header and surrounding whitespace are accepted.

    Raises:
        Graph6Error: If the text is not valid graph6 or the order is unsupported.
    """
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string")
    for position, ch in enumerate(text):
        if not (_FIRST <= ord(ch) <= _LAST):
            raise Graph6Error(f"invalid character {ch!r} at offset {position}")
    if len(text) > _MAX_LENGTH:
        raise Graph6Error(f"orders above {MAX_ORDER} are not supported")
    try:
        graph = Graph.from_networkx(nx.from_graph6_bytes(text.encode("ascii")))
    except (nx.NetworkXError, ValueError, IndexError) as error:
        raise Graph6Error(str(error) or "truncated order field") from error
    if encode_graph6(graph) != text:
        raise Graph6Error("not in canonical graph6 form (non-zero padding or long order field)")
    return graph


def read_graph6(
    lines: Iterable[str],
    on_error: Optional[Callable[[Graph6Error], None]] = None,
) -> Iterator[Tuple[int, Graph]]:
    """
    Iterates over ``(line_number, graph)`` for a stream of graph6 lines.

    Blank lines are skipped. Malformed lines raise Graph6Error unless
    ``on_error`` is given, in which case it receives the error and reading
    continues.
    """
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            graph = decode_graph6(line)
        except Graph6Error as error:
            located = Graph6Error(str(error), line_number)
            if on_error is None:
                raise located from error
            on_error(located)
            continue
        yield line_number, graph


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> int:
    """Writes each graph as one graph6 line; returns the number written."""
    count = 0
    for graph in graphs:
        stream.write(encode_graph6(graph) + "\n")
        count += 1
    return count
