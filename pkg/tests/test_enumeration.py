import itertools
import math
import unittest

import networkx as nx

from theta_spectra.enumeration import (
    EnumerationConstraints,
    ExtremalReport,
    enumerate_graphs,
    extremal_search,
    rank_by_spectral_radius,
)
from theta_spectra.forbidden import F5, THETA_122, THETA_123, is_free
from theta_spectra.graphs import (
    CanonicalKey,
    Graph,
    ScaleError,
    canonical_key,
    cycle,
    decode_graph6,
    encode_graph6,
    friendship,
    is_canonical,
    path,
    split_star,
    split_star_plus,
    star,
)
from theta_spectra.spectral import closed_q_friendship, closed_q_splitstar2, q_max


def brute_force_keys(n, constraints):
    pairs = list(itertools.combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        graph = Graph.from_edges(n, [pair for bit, pair in enumerate(pairs) if (mask >> bit) & 1])
        if constraints.accepts(graph):
            keys.add(canonical_key(graph))
    return keys


def stream_keys(stream):
    return [CanonicalKey(encode_graph6(graph)) for graph in stream]


class TestEnumerationCounts(unittest.TestCase):
    def test_all_graphs(self):
        for n, expected in zip(range(1, 8), (1, 2, 4, 11, 34, 156, 1044)):
            self.assertEqual(enumerate_graphs(n).count(), expected, n)

    def test_constrained_counts(self):
        self.assertEqual(enumerate_graphs(4, EnumerationConstraints(no_isolated=True)).count(), 7)
        self.assertEqual(enumerate_graphs(5, EnumerationConstraints(connected=True)).count(), 21)
        self.assertEqual(enumerate_graphs(5, EnumerationConstraints(edges=4)).count(), 6)
        self.assertEqual(enumerate_graphs(7, EnumerationConstraints(connected=True)).count(), 853)

    def test_small_orders_by_hand(self):
        graphs = list(enumerate_graphs(3))
        self.assertEqual(sorted(graph.m for graph in graphs), [0, 1, 2, 3])


class TestEnumerationOracles(unittest.TestCase):
    def test_brute_force(self):
        for constraints in (
            EnumerationConstraints(),
            EnumerationConstraints(no_isolated=True),
            EnumerationConstraints(connected=True),
            EnumerationConstraints(no_isolated=True, edges=5),
        ):
            for n in range(1, 6):
                keys = stream_keys(enumerate_graphs(n, constraints))
                self.assertEqual(set(keys), brute_force_keys(n, constraints), (n, str(constraints)))

    def test_graph_atlas(self):
        for n in range(1, 7):
            atlas = {
                canonical_key(Graph.from_networkx(g))
                for g in nx.graph_atlas_g()
                if g.number_of_nodes() == n
            }
            self.assertEqual(set(stream_keys(enumerate_graphs(n))), atlas)

    def test_no_duplicates(self):
        keys = stream_keys(enumerate_graphs(7))
        self.assertEqual(len(keys), len(set(keys)))

    def test_emitted_graphs_are_canonical(self):
        for graph in list(enumerate_graphs(6))[::9]:
            self.assertTrue(is_canonical(graph))

    def test_constraints_hold(self):
        constraints = EnumerationConstraints(no_isolated=True, connected=True)
        for graph in enumerate_graphs(6, constraints):
            self.assertGreaterEqual(graph.min_degree, 1)
            self.assertTrue(graph.is_connected())

    def test_graph6_round_trip(self):
        for n in range(1, 8):
            for graph in enumerate_graphs(n):
                self.assertEqual(decode_graph6(encode_graph6(graph)), graph)


class TestEnumerationStream(unittest.TestCase):
    def test_parallel_matches_serial(self):
        for constraints in (EnumerationConstraints(), EnumerationConstraints(no_isolated=True)):
            serial = list(enumerate_graphs(6, constraints))
            parallel = list(enumerate_graphs(6, constraints, jobs=2))
            self.assertEqual(parallel, serial)

    def test_stream_is_reiterable(self):
        stream = enumerate_graphs(5)
        self.assertEqual(list(stream), list(stream))
        self.assertEqual(repr(stream), "EnumerationStream(n=5, constraints=all, jobs=1)")

    def test_errors(self):
        with self.assertRaises(ValueError):
            enumerate_graphs(0)
        with self.assertRaises(ValueError):
            enumerate_graphs(5, jobs=0)
        with self.assertRaises(ScaleError):
            enumerate_graphs(9)

    def test_constraint_labels(self):
        self.assertEqual(str(EnumerationConstraints()), "all")
        self.assertEqual(
            str(EnumerationConstraints(no_isolated=True, connected=True, edges=3)),
            "no-isolated,connected,m=3",
        )
        self.assertTrue(EnumerationConstraints(edges=3).exhausted(3))
        self.assertFalse(EnumerationConstraints().exhausted(10))


class TestRanking(unittest.TestCase):
    def test_ties_are_resolved_exactly(self):
        scored = [(g, q_max(g).q) for g in (cycle(4), star(4), path(4))]
        best, winners, gap = rank_by_spectral_radius(scored)
        self.assertAlmostEqual(best, 4.0, places=10)
        self.assertEqual(winners, [cycle(4), star(4)])
        self.assertAlmostEqual(gap, 2 - math.sqrt(2), places=9)

    def test_single_and_empty(self):
        self.assertEqual(rank_by_spectral_radius([]), (None, [], None))
        best, winners, gap = rank_by_spectral_radius([(path(3), 3.0)])
        self.assertEqual((best, winners, gap), (3.0, [path(3)], None))


class TestExtremalSearch(unittest.TestCase):
    def test_theta_122_free(self):
        report = extremal_search(6, [THETA_122])
        self.assertTrue(report.unique)
        self.assertEqual(report.witnesses, (canonical_key(friendship(6)),))
        self.assertAlmostEqual(report.max_q, closed_q_friendship(6), delta=1e-8)
        self.assertGreater(report.runner_up_gap, 0)

    def test_theta_123_free(self):
        report = extremal_search(6, [THETA_123])
        self.assertEqual(report.witnesses, (canonical_key(split_star(6, 2)),))
        self.assertAlmostEqual(report.max_q, 4 + 2 * math.sqrt(3), delta=1e-8)
        self.assertAlmostEqual(report.max_q, closed_q_splitstar2(6), delta=1e-8)

    def test_theta_122_and_f5_free(self):
        report = extremal_search(6, [THETA_122, F5])
        self.assertEqual(report.witnesses, (canonical_key(split_star_plus(6, 1)),))
        self.assertEqual(report.family, ("theta-1-2-2", "f5"))

    def test_agrees_with_naive_maximum(self):
        universe = list(enumerate_graphs(6, EnumerationConstraints(no_isolated=True)))
        scored = [(graph, q_max(graph, cross_check=False).q) for graph in universe]
        for family in ([THETA_122], [THETA_123], [THETA_122, F5]):
            naive = max(q for graph, q in scored if is_free(graph, family))
            count = sum(1 for graph, _ in scored if is_free(graph, family))
            report = extremal_search(6, family)
            self.assertAlmostEqual(report.max_q, naive, delta=1e-12)
            self.assertEqual(report.count_free, count)

    def test_unrestricted_family(self):
        report = extremal_search(5)
        self.assertEqual(report.witnesses, (CanonicalKey("D~{"),))
        self.assertAlmostEqual(report.max_q, 8.0, places=9)
        self.assertEqual(report.count_free, 23)
        self.assertTrue(report.unique)

    def test_report_dictionary(self):
        report = ExtremalReport(
            n=4,
            family=("theta-1-2-2",),
            count_free=2,
            max_q=4.0,
            witnesses=(CanonicalKey("C]"),),
            unique=True,
            runner_up_gap=0.5,
        )
        self.assertEqual(
            report.to_dict(),
            {
                "n": 4,
                "family": ["theta-1-2-2"],
                "constraints": "no-isolated",
                "count_free": 2,
                "max_q": 4.0,
                "witnesses": ["C]"],
                "unique": True,
                "runner_up_gap": 0.5,
            },
        )


if __name__ == "__main__":
    unittest.main()
