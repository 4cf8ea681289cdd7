"""
This module checks the extremal theorems and the supporting lemmas on every
graph of small order, and the proof witnesses on larger orders.

Each check returns a VerificationResult; ``passed`` is None when a result is
only reported, not asserted.

Classes:
    - VerificationResult: Outcome and details of one check.
    - TheoremSpec: A forbidden family with its claimed extremal graph.

Functions:
    - verify_theorem: Exhaustive extremal search against the claimed maximizer.
    - verify_path_bound: Edge bound for graphs without long paths.
    - verify_h_graph_max: The maximizer among connected graphs with n+k edges.
    - verify_degree_bounds: q <= max degree pressure <= 2m/(n-1) + n - 2.
    - verify_monotonicity: Deleting an edge of a connected graph lowers q.
    - sample_monotonicity: The same on seeded random connected graphs.
    - verify_witnesses: Neighbourhood witnesses built from the equality cases.
    - verify_neighborhood_structure: Neighbourhoods of theta-free graphs.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from ..config import CLOSED_FORM_TOLERANCE, MAX_ENUMERATION_ORDER, MAX_ORDER, TIE_BAND
from ..graphs import (
    Graph,
    ScaleError,
    canonical_key,
    friendship,
    h_graph,
    split_star,
    split_star_plus,
    witness_g1,
    witness_g2,
    witness_g3,
)
from ..forbidden import F5, THETA_122, THETA_123, Pattern, has_path_subgraph, is_free
from ..spectral import (
    attains_pressure_bound,
    closed_q_friendship,
    closed_q_splitstar2,
    closed_q_splitstarplus1,
    das_bound_exact,
    degree_pressure_exact,
    max_degree_pressure_exact,
    neighborhood_decomposition,
    q_max,
    same_spectral_radius,
)
from .extremal import ExtremalReport, extremal_search
from .orderly import EnumerationConstraints, enumerate_graphs

logger = logging.getLogger(__name__)

# Theorems are claimed from this order on; smaller orders are only reported.
THEOREM_MIN_ORDER = 6
THEOREM_REPORT_ORDER = 4

WITNESS_MIN_ORDER = 6
WITNESS_MAX_ORDER = 40

MONOTONICITY_SAMPLES = 200
MONOTONICITY_SAMPLE_ORDER = 20


@dataclass(frozen=True)
class VerificationResult:
    """
    Attributes:
        name (str): The check, e.g. ``friendship`` or ``path-bound``.
        params (Dict[str, int]): The parameters it ran with.
        passed (Optional[bool]): True or False when asserted, None when only reported.
        details (Dict[str, Any]): Counts and values behind the verdict.
        report (Optional[ExtremalReport]): The extremal search, for searches.
    """

    name: str
    params: Dict[str, int]
    passed: Optional[bool]
    details: Dict[str, Any] = field(default_factory=dict)
    report: Optional[ExtremalReport] = None

    @property
    def status(self) -> str:
        return {True: "pass", False: "fail", None: "reported"}[self.passed]

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "check": self.name,
            "params": dict(self.params),
            "status": self.status,
            "details": dict(self.details),
        }
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out


@dataclass(frozen=True)
class TheoremSpec:
    """
    Attributes:
        family (Tuple[Pattern, ...]): The forbidden patterns.
        extremal (Callable[[int], Graph]): The claimed unique maximizer of order n.
        closed_form (Callable[[int], float]): Its spectral radius.
    """

    family: Tuple[Pattern, ...]
    extremal: Callable[[int], Graph]
    closed_form: Callable[[int], float]


THEOREMS: Dict[str, TheoremSpec] = {
    "friendship": TheoremSpec((THETA_122,), friendship, closed_q_friendship),
    "split-star": TheoremSpec((THETA_123,), lambda n: split_star(n, 2), closed_q_splitstar2),
    "split-star-plus": TheoremSpec(
        (THETA_122, F5), lambda n: split_star_plus(n, 1), closed_q_splitstarplus1
    ),
}


# Numeric ids accepted next to the names.
THEOREM_IDS: Dict[str, str] = {
    "1.2": "friendship",
    "1.3": "split-star",
    "1.4": "split-star-plus",
}


def resolve_theorem(name: str) -> str:
    """Returns the theorem name for a name or numeric id."""
    return THEOREM_IDS.get(name, name)


def _log(result: VerificationResult) -> VerificationResult:
    logger.info("%s %s: %s", result.name, result.params, result.status)
    return result


def _check_scale(n: int, limit: int = MAX_ENUMERATION_ORDER) -> None:
    if n > limit:
        raise ScaleError(f"Exhaustive checks are limited to order {limit}, received {n}.")


def verify_theorem(name: str, n: int, jobs: int = 1) -> VerificationResult:
    """
    Searches all graphs of order ``n`` without isolated vertices that avoid the
    theorem's family, and compares the maximizer with the claimed graph.
    ``name`` is a theorem name or its numeric id (``1.2``, ``1.3``, ``1.4``).

    Passes iff the maximizer is unique, isomorphic to the claimed graph, and its
    q agrees with the closed form. Orders 4 and 5 are searched and reported
    without a verdict.

    Raises:
        ValueError: If the theorem is unknown or ``n < 4``.
        ScaleError: If ``n > 8``.
    """
    name = resolve_theorem(name)
    if name not in THEOREMS:
        known = ", ".join([*THEOREMS, *THEOREM_IDS])
        raise ValueError(f"Unknown theorem '{name}'. Known theorems: {known}.")
    if n < THEOREM_REPORT_ORDER:
        raise ValueError(f"Theorem checks need n >= {THEOREM_REPORT_ORDER}, received {n}.")
    _check_scale(n)
    spec = THEOREMS[name]
    report = extremal_search(n, spec.family, jobs=jobs)
    expected = canonical_key(spec.extremal(n))
    closed = spec.closed_form(n)
    matches = report.unique and report.witnesses[0] == expected
    agrees = report.max_q is not None and abs(report.max_q - closed) <= CLOSED_FORM_TOLERANCE
    details = {
        "expected": expected.graph6,
        "closed_form": closed,
        "witness_matches": matches,
        "closed_form_agrees": agrees,
    }
    passed = (matches and agrees) if n >= THEOREM_MIN_ORDER else None
    return _log(VerificationResult(name, {"n": n}, passed, details, report))


def _is_clique_union(graph: Graph, k: int) -> bool:
    return all(
        len(part) == k and graph.edges_within(part) == k * (k - 1) // 2
        for part in graph.components()
    )


def verify_path_bound(n: int, k: int, jobs: int = 1) -> VerificationResult:
    """
    Over all graphs of order ``n`` with no path on k+1 vertices: at most
    (k-1)n/2 edges, with equality exactly for disjoint unions of K_k.

    Raises:
        ValueError: Unless ``2 <= k <= n``.
        ScaleError: If ``n > 8``.
    """
    if not (2 <= k <= n):
        raise ValueError(f"path-bound requires 2 <= k <= n, received n={n}, k={k}.")
    _check_scale(n)
    bound = Fraction((k - 1) * n, 2)
    max_edges = 0
    over = 0
    equality = 0
    bad_equality = 0
    free = 0
    for graph in enumerate_graphs(n, jobs=jobs):
        if has_path_subgraph(graph, k + 1):
            continue
        free += 1
        max_edges = max(max_edges, graph.m)
        if graph.m > bound:
            over += 1
        elif graph.m == bound:
            equality += 1
            if not _is_clique_union(graph, k):
                bad_equality += 1
    divisible = n % k == 0
    passed = over == 0 and bad_equality == 0 and (equality == 1) == divisible and equality <= 1
    details = {
        "path_free_graphs": free,
        "max_edges": max_edges,
        "bound": float(bound),
        "over_bound": over,
        "equality_graphs": equality,
        "equality_not_clique_union": bad_equality,
    }
    return _log(VerificationResult("path-bound", {"n": n, "k": k}, passed, details))


def verify_h_graph_max(n: int, k: int, jobs: int = 1) -> VerificationResult:
    """
    Checks that H_{n,k} is the unique q-maximizer among connected graphs of
    order ``n`` with n+k edges.

    Raises:
        ValueError: Unless ``3 <= k <= n-3``.
        ScaleError: If ``n > 8``.
    """
    if not (3 <= k <= n - 3):
        raise ValueError(f"h-graph requires 3 <= k <= n-3, received n={n}, k={k}.")
    _check_scale(n)
    constraints = EnumerationConstraints(connected=True, edges=n + k)
    report = extremal_search(n, (), constraints, jobs)
    expected = canonical_key(h_graph(n, k))
    passed = report.unique and report.witnesses[0] == expected
    details = {"expected": expected.graph6}
    return _log(VerificationResult("h-graph", {"n": n, "k": k}, passed, details, report))


def verify_degree_bounds(n: int, jobs: int = 1) -> VerificationResult:
    """
    Over all graphs of order ``n`` without isolated vertices, checks
    q <= max degree pressure <= 2m/(n-1) + n - 2, and that on connected graphs
    q equals the pressure bound exactly for the regular and semi-regular
    bipartite ones.

    Raises:
        ValueError: If ``n < 2``.
        ScaleError: If ``n > 8``.
    """
    if n < 2:
        raise ValueError(f"degree-bounds requires n >= 2, received {n}.")
    _check_scale(n)
    graphs = 0
    connected = 0
    chain_violations = 0
    equality = 0
    equality_mismatches = 0
    for graph in enumerate_graphs(n, EnumerationConstraints(no_isolated=True), jobs):
        graphs += 1
        q = q_max(graph, cross_check=False).q
        _, pressure = max_degree_pressure_exact(graph)
        if q > float(pressure) + TIE_BAND or pressure > das_bound_exact(graph):
            chain_violations += 1
            logger.warning("Bound chain fails for %r.", graph)
        if not graph.is_connected():
            continue
        connected += 1
        attained = attains_pressure_bound(graph, q)
        expected = graph.is_regular() or graph.is_semiregular_bipartite()
        equality += attained
        if attained != expected:
            equality_mismatches += 1
            logger.warning("Pressure equality is %s for %r.", attained, graph)
    details = {
        "graphs": graphs,
        "connected_graphs": connected,
        "chain_violations": chain_violations,
        "equality_graphs": equality,
        "equality_mismatches": equality_mismatches,
    }
    passed = chain_violations == 0 and equality_mismatches == 0
    return _log(VerificationResult("degree-bounds", {"n": n}, passed, details))


def verify_monotonicity(n: int, jobs: int = 1) -> VerificationResult:
    """
    For every connected graph of order ``n`` and each of its edges e, checks
    q(G - e) < q(G) strictly.

    Raises:
        ScaleError: If ``n > 8``.
    """
    _check_scale(n)
    graphs = 0
    deletions = 0
    violations = 0
    for graph in enumerate_graphs(n, EnumerationConstraints(connected=True), jobs):
        graphs += 1
        q = q_max(graph, cross_check=False).q
        for u, v in graph.edges():
            deletions += 1
            smaller = graph.remove_edge(u, v)
            q_smaller = q_max(smaller, cross_check=False).q
            if q - q_smaller > TIE_BAND:
                continue
            if q_smaller > q or same_spectral_radius(graph, smaller, q, q_smaller):
                violations += 1
                logger.warning("Deleting (%d, %d) does not lower q of %r.", u, v, graph)
    details = {"connected_graphs": graphs, "edge_deletions": deletions, "violations": violations}
    return _log(VerificationResult("monotonicity", {"n": n}, violations == 0, details))


def random_connected_graph(n: int, rng: np.random.Generator) -> Graph:
    """
    A random connected graph of order ``n``: a random recursive tree on a
    shuffled vertex order, plus every other pair with one random density.
    """
    order = rng.permutation(n)
    edges = {
        tuple(sorted((int(order[i]), int(order[rng.integers(i)])))) for i in range(1, n)
    }
    density = rng.uniform(0.1, 0.6)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                edges.add((u, v))
    return Graph.from_edges(n, edges)


def sample_monotonicity(
    max_order: int = MONOTONICITY_SAMPLE_ORDER,
    samples: int = MONOTONICITY_SAMPLES,
    seed: int = 0,
) -> VerificationResult:
    """
    Checks q(G - e) < q(G) on random connected graphs of order 3..``max_order``,
    one random edge e per graph. The seed fixes the sample.

    Raises:
        ValueError: Unless ``3 <= max_order <= 64`` and ``samples >= 1``.
    """
    if not (3 <= max_order <= MAX_ORDER) or samples < 1:
        raise ValueError(
            f"monotonicity-sample requires 3 <= n <= {MAX_ORDER} and samples >= 1, "
            f"received n={max_order}, samples={samples}."
        )
    rng = np.random.default_rng(seed)
    violations = 0
    largest = 0
    for _ in range(samples):
        graph = random_connected_graph(int(rng.integers(3, max_order + 1)), rng)
        edges = list(graph.edges())
        u, v = edges[rng.integers(len(edges))]
        smaller = graph.remove_edge(u, v)
        q = q_max(graph, cross_check=False).q
        q_smaller = q_max(smaller, cross_check=False).q
        largest = max(largest, graph.n)
        if q - q_smaller > TIE_BAND:
            continue
        if q_smaller > q or same_spectral_radius(graph, smaller, q, q_smaller):
            violations += 1
            logger.warning("Deleting (%d, %d) does not lower q of %r.", u, v, graph)
    details = {"samples": samples, "seed": seed, "largest_order": largest, "violations": violations}
    params = {"n": max_order, "samples": samples}
    return _log(VerificationResult("monotonicity-sample", params, violations == 0, details))


def _witness_details(
    graph: Graph, family: Tuple[Pattern, ...], matching: int, bound: Fraction, rival: float
) -> Dict[str, Any]:
    n = graph.n
    q = q_max(graph).q
    decomposition = neighborhood_decomposition(graph, 0)
    hub_pressure = degree_pressure_exact(graph, 0)
    _, top_pressure = max_degree_pressure_exact(graph)
    degree = decomposition.degree
    return {
        "order": n,
        "q": q,
        "free": is_free(graph, family),
        "hub_degree": degree,
        "outer_edges": decomposition.outer_edges,
        "outer_edges_expected": (n - 1 - degree) * (degree - matching),
        "hub_pressure": str(hub_pressure),
        "pressure_bound": str(bound),
        "hub_is_max_pressure": hub_pressure == top_pressure,
        "below_bound": q < float(bound) - TIE_BAND,
        "rival_q": rival,
        "below_rival": q < rival - TIE_BAND,
    }


def _witness_passes(details: Dict[str, Any]) -> bool:
    return bool(
        details["free"]
        and details["hub_degree"] == details["order"] - 2
        and details["outer_edges"] == details["outer_edges_expected"]
        and details["hub_pressure"] == details["pressure_bound"]
        and details["hub_is_max_pressure"]
        and details["below_bound"]
        and details["below_rival"]
    )


def verify_witnesses(n: int) -> VerificationResult:
    """
    Checks the neighbourhood witnesses of order ``n``.

    For odd n the matching witness on n-2 hub neighbours with one isolated
    neighbour, for even n the perfect-matching witness; for every n the
    single-edge witness. Each must avoid its family, meet the outer edge count
    and the hub pressure bound exactly, stay strictly below that bound in q, and
    stay strictly below the extremal graph of its family.

    Raises:
        ValueError: Unless ``6 <= n <= 40``.
    """
    if not (WITNESS_MIN_ORDER <= n <= WITNESS_MAX_ORDER):
        raise ValueError(
            f"witnesses requires {WITNESS_MIN_ORDER} <= n <= {WITNESS_MAX_ORDER}, received {n}."
        )
    checks: Dict[str, Dict[str, Any]] = {}
    rival = closed_q_friendship(n)
    if n % 2 == 1:
        t = (n - 3) // 2
        checks["g1"] = _witness_details(
            witness_g1(n), (THETA_122,), t, n + Fraction(t, n - 2), rival
        )
    else:
        t = (n - 2) // 2
        checks["g2"] = _witness_details(
            witness_g2(n), (THETA_122,), t, n + Fraction(t, n - 2), rival
        )
    checks["g3"] = _witness_details(
        witness_g3(n), (THETA_122, F5), 1, n + Fraction(1, n - 2), closed_q_splitstarplus1(n)
    )
    passed = all(_witness_passes(details) for details in checks.values())
    return _log(VerificationResult("witnesses", {"n": n}, passed, checks))


def verify_neighborhood_structure(n: int, jobs: int = 1) -> VerificationResult:
    """
    Over all graphs of order ``n`` without isolated vertices: every
    neighbourhood of a theta(1,2,2)-free graph has no path on 3 vertices, and
    every neighbourhood of a theta(1,2,3)-free graph none on 4.

    Raises:
        ScaleError: If ``n > 8``.
    """
    _check_scale(n)
    counts = {"theta-1-2-2": [0, 0], "theta-1-2-3": [0, 0]}
    rules = ((THETA_122, 3), (THETA_123, 4))
    for graph in enumerate_graphs(n, EnumerationConstraints(no_isolated=True), jobs):
        for pattern, path_order in rules:
            if not is_free(graph, (pattern,)):
                continue
            counts[pattern.name][0] += 1
            for u in range(n):
                if has_path_subgraph(graph.induced_subgraph(graph.neighbors(u)), path_order):
                    counts[pattern.name][1] += 1
                    logger.warning("Neighbourhood of %d in %r has a long path.", u, graph)
                    break
    details = {
        f"{name}_free_graphs": free for name, (free, _) in counts.items()
    }
    details.update({f"{name}_violations": bad for name, (_, bad) in counts.items()})
    passed = all(bad == 0 for _, bad in counts.values())
    return _log(VerificationResult("neighborhoods", {"n": n}, passed, details))


LEMMA_CHECKS: Dict[str, Tuple[bool, Callable[..., VerificationResult]]] = {
    "path-bound": (True, verify_path_bound),
    "degree-bounds": (False, verify_degree_bounds),
    "h-graph": (True, verify_h_graph_max),
    "monotonicity": (False, verify_monotonicity),
    "monotonicity-sample": (False, lambda n, jobs=1: sample_monotonicity(n)),
    "witnesses": (False, lambda n, jobs=1: verify_witnesses(n)),
    "neighborhoods": (False, verify_neighborhood_structure),
}


LEMMA_IDS: Dict[str, str] = {
    "2.3": "path-bound",
    "2.4": "degree-bounds",
    "2.5": "degree-bounds",
    "2.6": "h-graph",
    "2.7": "monotonicity",
}


def resolve_lemma(name: str) -> str:
    """Returns the lemma check name for a name or numeric id."""
    return LEMMA_IDS.get(name, name)


def verify_lemma(name: str, n: int, k: Optional[int] = None, jobs: int = 1) -> VerificationResult:
    """
    Dispatches a lemma check by name or numeric id.

    Raises:
        ValueError: If the name is unknown, or ``k`` is missing for a check that needs it.
    """
    name = resolve_lemma(name)
    if name not in LEMMA_CHECKS:
        known = ", ".join([*LEMMA_CHECKS, *LEMMA_IDS])
        raise ValueError(f"Unknown lemma check '{name}'. Known checks: {known}.")
    needs_k, check = LEMMA_CHECKS[name]
    if needs_k:
        if k is None:
            raise ValueError(f"Lemma check '{name}' needs --k.")
        return check(n, k, jobs=jobs)
    return check(n, jobs=jobs)
