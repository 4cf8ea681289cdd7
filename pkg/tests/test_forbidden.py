import itertools
import unittest

import networkx as nx

from theta_spectra.forbidden import (
    F5,
    THETA_122,
    THETA_123,
    Embedding,
    Pattern,
    contains_subgraph,
    find_forbidden,
    has_path_subgraph,
    is_free,
    parse_pattern,
    parse_patterns,
)
from theta_spectra.graphs import (
    Graph,
    complete,
    cycle,
    empty,
    friendship,
    path,
    split_star,
    split_star_plus,
    theta,
)


def small_graphs(min_order, max_order):
    return [
        Graph.from_networkx(g)
        for g in nx.graph_atlas_g()
        if min_order <= g.number_of_nodes() <= max_order
    ]


def brute_force_contains(host, target):
    edges = list(target.edges())
    return any(
        all(host.has_edge(image[u], image[v]) for u, v in edges)
        for image in itertools.permutations(range(host.n), target.n)
    )


class TestPatterns(unittest.TestCase):
    def test_theta_literals(self):
        pattern = parse_pattern("theta-2-1-2")
        self.assertEqual(pattern.name, "theta-1-2-2")
        self.assertEqual(pattern.target, theta(1, 2, 2))
        self.assertEqual(parse_pattern(" Theta-1-2-3 ").target, theta(1, 2, 3))
        self.assertEqual(parse_pattern("theta-2-2-2-2").target.m, 8)

    def test_simple_literals(self):
        self.assertEqual(parse_pattern("f5").target, friendship(5))
        self.assertEqual(parse_pattern("p4").target, path(4))
        self.assertEqual(parse_pattern("k3").target, complete(3))
        self.assertEqual(str(F5), "f5")

    def test_bad_literals(self):
        for literal in ("f4", "f1", "p1", "k0", "theta-1", "theta-1-1-2", "petersen", ""):
            with self.assertRaises(ValueError):
                parse_pattern(literal)

    def test_lists(self):
        self.assertEqual(parse_patterns("theta-1-2-2,f5"), (THETA_122, F5))
        self.assertEqual(parse_patterns("p3, ,k3"), (parse_pattern("p3"), parse_pattern("k3")))
        with self.assertRaises(ValueError):
            parse_patterns(" , ")

    def test_isolated_vertex(self):
        with self.assertRaises(ValueError):
            Pattern("k2+k1", complete(2).disjoint_union(empty(1)))


class TestContainsSubgraph(unittest.TestCase):
    def test_examples(self):
        self.assertIsNotNone(contains_subgraph(complete(4), THETA_122))
        self.assertIsNone(contains_subgraph(friendship(9), THETA_122))
        self.assertIsNone(contains_subgraph(split_star(8, 2), THETA_123))

    def test_embedding_is_valid(self):
        for host, pattern in (
            (complete(6), THETA_123),
            (split_star_plus(7, 1), parse_pattern("k3")),
            (split_star(7, 2), THETA_122),
            (friendship(9), F5),
        ):
            embedding = contains_subgraph(host, pattern)
            self.assertIsNotNone(embedding)
            self.assertTrue(embedding.is_valid(host, pattern.target))

    def test_embedding_validation(self):
        self.assertFalse(Embedding((0, 0, 1)).is_valid(complete(3), path(3)))
        self.assertFalse(Embedding((0, 1, 2)).is_valid(path(3), complete(3)))
        self.assertTrue(Embedding((1, 0, 2)).is_valid(complete(3), path(3)))
        self.assertEqual(Embedding((2, 0, 1)).image(0), 2)

    def test_pattern_larger_than_host(self):
        self.assertIsNone(contains_subgraph(complete(3), THETA_122))

    def test_agrees_with_brute_force(self):
        patterns = (THETA_122, THETA_123, F5, parse_pattern("p3"), parse_pattern("p4"))
        for host in small_graphs(1, 6):
            for pattern in patterns:
                expected = pattern.target.n <= host.n and brute_force_contains(host, pattern.target)
                found = contains_subgraph(host, pattern)
                self.assertEqual(found is not None, expected, f"{pattern} in {host!r}")

    def test_deterministic(self):
        host = complete(5)
        self.assertEqual(contains_subgraph(host, THETA_123), contains_subgraph(host, THETA_123))


class TestFreeness(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(is_free(split_star_plus(8, 1), [THETA_122, F5]))
        self.assertFalse(is_free(complete(5), [THETA_122]))
        self.assertTrue(is_free(cycle(7), [THETA_122, THETA_123, F5]))
        self.assertTrue(is_free(complete(3), []))

    def test_find_forbidden_reports_the_first_pattern(self):
        pattern, embedding = find_forbidden(complete(4), [F5, THETA_123, THETA_122])
        self.assertEqual(pattern, THETA_122)
        self.assertTrue(embedding.is_valid(complete(4), THETA_122.target))
        pattern, _ = find_forbidden(complete(5), [THETA_123, F5])
        self.assertEqual(pattern, THETA_123)
        self.assertIsNone(find_forbidden(friendship(7), [THETA_122]))

    def test_neighborhoods_of_free_graphs(self):
        for graph in small_graphs(4, 7):
            for u in range(graph.n):
                if graph.degree(u) < 3:
                    continue
                neighborhood = graph.induced_subgraph(graph.neighbors(u))
                if is_free(graph, [THETA_122]):
                    self.assertFalse(has_path_subgraph(neighborhood, 3))
                if is_free(graph, [THETA_123]):
                    self.assertFalse(has_path_subgraph(neighborhood, 4))

    def test_supergraphs_stay_non_free(self):
        for host in small_graphs(4, 6)[::7]:
            if is_free(host, [THETA_122]):
                continue
            for u, v in itertools.combinations(range(host.n), 2):
                if not host.has_edge(u, v):
                    self.assertFalse(is_free(host.add_edge(u, v), [THETA_122]))


class TestPaths(unittest.TestCase):
    def test_examples(self):
        matching = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
        self.assertFalse(has_path_subgraph(matching, 3))
        triangles = complete(3).disjoint_union(complete(3))
        self.assertFalse(has_path_subgraph(triangles, 4))
        self.assertTrue(has_path_subgraph(triangles, 3))
        self.assertTrue(has_path_subgraph(path(5), 5))
        self.assertFalse(has_path_subgraph(path(5), 6))

    def test_trivial_lengths(self):
        self.assertTrue(has_path_subgraph(empty(3), 1))
        self.assertFalse(has_path_subgraph(empty(3), 2))
        with self.assertRaises(ValueError):
            has_path_subgraph(path(3), 0)

    def test_agrees_with_pattern_search(self):
        for host in small_graphs(2, 6)[::3]:
            for k in range(2, host.n + 1):
                self.assertEqual(
                    has_path_subgraph(host, k),
                    contains_subgraph(host, parse_pattern(f"p{k}")) is not None,
                )


if __name__ == "__main__":
    unittest.main()
