import unittest

import networkx as nx

from theta_spectra.graphs import (
    Family,
    FamilySpec,
    canonical_key,
    complete,
    cone_over_triangles,
    friendship,
    generalized_theta,
    h_graph,
    split_star,
    split_star_plus,
    star,
    theta,
    witness_g1,
    witness_g2,
    witness_g3,
)


def degree_sequence(graph):
    return tuple(sorted(graph.degrees(), reverse=True))


class TestFriendship(unittest.TestCase):
    def test_odd_order(self):
        graph = friendship(5)
        self.assertEqual((graph.n, graph.m), (5, 6))
        self.assertEqual(degree_sequence(graph), (4, 2, 2, 2, 2))

    def test_even_order(self):
        graph = friendship(6)
        self.assertEqual((graph.n, graph.m), (6, 7))
        self.assertEqual(degree_sequence(graph), (5, 2, 2, 2, 2, 1))
        self.assertEqual(graph.degree(5), 1)

    def test_triangle(self):
        self.assertEqual(friendship(3), complete(3))

    def test_domain(self):
        with self.assertRaises(ValueError):
            friendship(2)


class TestSplitStars(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(split_star(6, 2).m, 9)
        for n in range(4, 12):
            for k in range(1, n - 1):
                self.assertEqual(split_star(n, k).m, k * (k - 1) // 2 + k * (n - k))

    def test_plus_variant(self):
        graph = split_star_plus(6, 1)
        self.assertEqual(graph.m, 6)
        self.assertEqual(graph, star(6).add_edge(1, 2))

    def test_small_split_star_is_theta_122(self):
        self.assertEqual(split_star(4, 2).m, 5)
        self.assertEqual(canonical_key(split_star(4, 2)), canonical_key(theta(1, 2, 2)))

    def test_domain(self):
        with self.assertRaises(ValueError):
            split_star(5, 4)
        with self.assertRaises(ValueError):
            split_star(5, 0)
        with self.assertRaises(ValueError):
            split_star_plus(5, 4)


class TestTheta(unittest.TestCase):
    def test_orders_and_sizes(self):
        self.assertEqual((theta(1, 2, 2).n, theta(1, 2, 2).m), (4, 5))
        self.assertEqual((theta(1, 2, 3).n, theta(1, 2, 3).m), (5, 6))
        for lengths in ([2, 3, 4], [1, 3, 3], [2, 2, 2, 2], [1, 2]):
            graph = generalized_theta(lengths)
            self.assertEqual(graph.n, 2 + sum(length - 1 for length in lengths))
            self.assertEqual(graph.m, sum(lengths))

    def test_k_4_minus_an_edge(self):
        self.assertTrue(
            nx.is_isomorphic(theta(1, 2, 2).to_networkx(), complete(4).remove_edge(0, 1).to_networkx())
        )

    def test_complete_bipartite(self):
        graph = generalized_theta([2, 2, 2])
        self.assertTrue(nx.is_isomorphic(graph.to_networkx(), nx.complete_bipartite_graph(2, 3)))

    def test_lengths_are_sorted(self):
        self.assertEqual(theta(3, 1, 2), theta(1, 2, 3))

    def test_domain(self):
        with self.assertRaises(ValueError):
            theta(1, 1, 2)
        with self.assertRaises(ValueError):
            theta(0, 2, 2)
        with self.assertRaises(ValueError):
            generalized_theta([3])


class TestHGraph(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(h_graph(7, 3).m, 10)
        self.assertEqual(h_graph(6, 3).m, 9)
        for n in range(6, 12):
            for k in range(3, n - 2):
                self.assertEqual(h_graph(n, k).m, n + k)

    def test_degree_sequence(self):
        self.assertEqual(degree_sequence(h_graph(8, 3)), (7, 5, 2, 2, 2, 2, 1, 1))

    def test_domain(self):
        with self.assertRaises(ValueError):
            h_graph(6, 4)
        with self.assertRaises(ValueError):
            h_graph(8, 2)


class TestConeOverTriangles(unittest.TestCase):
    def test_smallest_is_complete(self):
        self.assertEqual(cone_over_triangles(4), complete(4))

    def test_size(self):
        graph = cone_over_triangles(7)
        self.assertEqual((graph.n, graph.m), (7, 12))
        self.assertEqual(graph.degree(0), 6)

    def test_domain(self):
        with self.assertRaises(ValueError):
            cone_over_triangles(8)


class TestWitnesses(unittest.TestCase):
    def test_single_edge_witness(self):
        graph = witness_g3(6)
        hub = graph.neighbors(0)
        self.assertEqual(len(hub), 4)
        self.assertEqual(graph.edges_within(hub), 1)
        self.assertEqual(graph.edges_between(hub, graph.second_neighborhood(0)), 3)

    def test_odd_matching_witness(self):
        graph = witness_g1(7)
        hub = graph.neighbors(0)
        self.assertEqual(len(hub), 5)
        self.assertEqual(graph.edges_within(hub), 2)
        self.assertEqual(graph.degree(6), 3)

    def test_even_matching_witness(self):
        graph = witness_g2(6)
        hub = graph.neighbors(0)
        self.assertEqual(graph.induced_subgraph(hub).m, 2)
        self.assertEqual(graph.induced_subgraph(hub).degrees(), [1, 1, 1, 1])
        self.assertEqual(graph.edges_between(hub, graph.second_neighborhood(0)), 2)

    def test_outside_vertex_degrees(self):
        for n in range(7, 20, 2):
            self.assertEqual(witness_g1(n).degree(n - 1), (n - 1) // 2)
        for n in range(6, 20, 2):
            self.assertEqual(witness_g2(n).degree(n - 1), (n - 2) // 2)
        for n in range(6, 20):
            self.assertEqual(witness_g3(n).degree(n - 1), n - 3)

    def test_domain(self):
        with self.assertRaises(ValueError):
            witness_g1(8)
        with self.assertRaises(ValueError):
            witness_g1(5)
        with self.assertRaises(ValueError):
            witness_g2(7)
        with self.assertRaises(ValueError):
            witness_g3(5)


class TestFamilySpec(unittest.TestCase):
    def test_parse_and_build(self):
        spec = FamilySpec.parse("split-star", [6, 2])
        self.assertEqual(spec.family, Family.SPLIT_STAR)
        self.assertEqual(spec.build(), split_star(6, 2))
        self.assertEqual(str(spec), "split-star(6, 2)")

    def test_variadic_theta(self):
        spec = FamilySpec.parse("generalized-theta", [2, 2, 2, 2])
        self.assertEqual(spec.build().m, 8)

    def test_errors(self):
        with self.assertRaises(ValueError):
            FamilySpec.parse("petersen", [10])
        with self.assertRaises(ValueError):
            FamilySpec.parse("friendship", [5, 1])
        with self.assertRaises(ValueError):
            FamilySpec.parse("generalized-theta", [])


if __name__ == "__main__":
    unittest.main()
