"""
This module finds the graphs of largest signless Laplacian spectral radius
among all graphs of a given order that avoid a family of patterns.

Classes:
    - ExtremalReport: The maximum, its witnesses and the margin to the rest.

Functions:
    - extremal_search: Enumerates, filters and ranks.
    - rank_by_spectral_radius: Ranks scored graphs with exact tie handling.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import TIE_BAND
from ..graphs import CanonicalKey, Graph
from ..graphs.canonical import key_of_canonical
from ..forbidden import Pattern, is_free
from ..spectral import q_max, same_spectral_radius
from .orderly import EnumerationConstraints, enumerate_graphs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremalReport:
    """
    The outcome of a search over one order and one pattern family.

    Attributes:
        n (int): The order.
        family (Tuple[str, ...]): Names of the forbidden patterns.
        count_free (int): Graphs, up to isomorphism, that passed the filter.
        max_q (Optional[float]): The largest q, None when nothing passed.
        witnesses (Tuple[CanonicalKey, ...]): Every class attaining ``max_q``, sorted.
        unique (bool): True iff there is exactly one witness.
        runner_up_gap (Optional[float]): ``max_q`` minus the best q of a non-witness,
            None when every graph is a witness.
        constraints (str): The enumeration filters, for the record.
    """

    n: int
    family: Tuple[str, ...]
    count_free: int
    max_q: Optional[float]
    witnesses: Tuple[CanonicalKey, ...]
    unique: bool
    runner_up_gap: Optional[float]
    constraints: str = field(default="no-isolated")

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "family": list(self.family),
            "constraints": self.constraints,
            "count_free": self.count_free,
            "max_q": self.max_q,
            "witnesses": [key.graph6 for key in self.witnesses],
            "unique": self.unique,
            "runner_up_gap": self.runner_up_gap,
        }


def rank_by_spectral_radius(
    scored: Sequence[Tuple[Graph, float]],
) -> Tuple[Optional[float], List[Graph], Optional[float]]:
    """
    Returns the maximum q, every graph attaining it and the gap to the best
    remaining graph.

    Graphs inside the tie band of the leader count as attaining the maximum
    only if ``same_spectral_radius`` confirms it exactly.
    """
    if not scored:
        return None, [], None
    leader, best = max(scored, key=lambda item: item[1])
    winners: List[Graph] = []
    runner_up: Optional[float] = None
    for graph, q in scored:
        tied = graph is leader or (
            best - q <= TIE_BAND and same_spectral_radius(leader, graph, best, q)
        )
        if tied:
            winners.append(graph)
        elif runner_up is None or q > runner_up:
            runner_up = q
    gap = None if runner_up is None else best - runner_up
    return best, winners, gap


def extremal_search(
    n: int,
    family: Iterable[Pattern] = (),
    constraints: Optional[EnumerationConstraints] = None,
    jobs: int = 1,
) -> ExtremalReport:
    """
    Finds the q-maximizers of order ``n`` that contain no pattern of ``family``.

    Args:
        n (int): The order, at most 8.
        family (Iterable[Pattern]): The forbidden patterns; empty keeps every graph.
        constraints (Optional[EnumerationConstraints]): The universe; defaults to
            graphs without isolated vertices.
        jobs (int, optional): Worker processes for the enumeration.

    Raises:
        ScaleError: If ``n`` exceeds the exhaustive limit.
    """
    family = tuple(family)
    constraints = constraints or EnumerationConstraints(no_isolated=True)
    scored: List[Tuple[Graph, float]] = []
    for graph in enumerate_graphs(n, constraints, jobs):
        if is_free(graph, family):
            scored.append((graph, q_max(graph, cross_check=False).q))
    best, winners, gap = rank_by_spectral_radius(scored)
    witnesses = tuple(sorted(key_of_canonical(graph) for graph in winners))
    report = ExtremalReport(
        n=n,
        family=tuple(pattern.name for pattern in family),
        count_free=len(scored),
        max_q=best,
        witnesses=witnesses,
        unique=len(witnesses) == 1,
        runner_up_gap=gap,
        constraints=str(constraints),
    )
    logger.info(
        "Order %d, family %s: %d free graphs, max q %s, %d witness(es).",
        n,
        list(report.family),
        report.count_free,
        best,
        len(witnesses),
    )
    return report
