import math
import unittest
from fractions import Fraction

import networkx as nx
import numpy as np

from theta_spectra.graphs import Graph, complete, cycle, friendship, path, star
from theta_spectra.spectral import (
    characteristic_polynomial,
    jacobi_eigensystem,
    largest_real_root,
    polynomial_divides,
    polynomial_gcd,
    power_iteration,
    q_max,
    same_spectral_radius,
    signless_characteristic_polynomial,
    signless_laplacian,
)
from theta_spectra.spectral.polynomials import bisect_root, evaluate


def small_graphs(max_order):
    return [
        Graph.from_networkx(g)
        for g in nx.graph_atlas_g()
        if 1 <= g.number_of_nodes() <= max_order
    ]


class TestPolynomials(unittest.TestCase):
    def test_characteristic_polynomial(self):
        self.assertEqual(characteristic_polynomial([[2, 1], [1, 2]]), [1, -4, 3])
        self.assertEqual(characteristic_polynomial([[Fraction(1, 2)]]), [1, Fraction(-1, 2)])
        self.assertEqual(characteristic_polynomial([[0, 1, 1], [1, 0, 1], [1, 1, 0]]), [1, 0, -3, -2])

    def test_float_entries_are_exact(self):
        self.assertEqual(characteristic_polynomial([[0.5]]), [1, Fraction(-1, 2)])
        self.assertEqual(characteristic_polynomial([[0.0, 2.0], [2.0, 0.0]]), [1, 0, -4])
        self.assertEqual(characteristic_polynomial([[0.1]]), [1, -Fraction(0.1)])

    def test_characteristic_polynomial_matches_numpy(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            matrix = rng.integers(-3, 4, size=(5, 5))
            exact = characteristic_polynomial(matrix.tolist())
            self.assertTrue(np.allclose(exact, np.poly(matrix.astype(float)), atol=1e-6))

    def test_characteristic_polynomial_errors(self):
        with self.assertRaises(ValueError):
            characteristic_polynomial([])
        with self.assertRaises(ValueError):
            characteristic_polynomial([[1, 2]])
        for entry in (float("nan"), float("inf"), 1j, "1"):
            with self.assertRaises(ValueError):
                characteristic_polynomial([[entry]])

    def test_gcd_and_divisibility(self):
        self.assertEqual(polynomial_gcd([1, -3, 2], [1, -1]), [1, -1])
        self.assertEqual(polynomial_gcd([2, -6, 4], [3, -9, 6]), [1, -3, 2])
        self.assertEqual(polynomial_gcd([1, -1], [1, -2]), [1])
        self.assertTrue(polynomial_divides([1, -1], [1, -3, 2]))
        self.assertFalse(polynomial_divides([1, -5], [1, -3, 2]))

    def test_largest_real_root(self):
        self.assertAlmostEqual(largest_real_root([1, -3, 2]), 2.0, places=10)
        self.assertAlmostEqual(largest_real_root([1, -2, 1]), 1.0, places=10)
        self.assertAlmostEqual(largest_real_root([-1, 0, 4]), 2.0, places=10)
        self.assertAlmostEqual(largest_real_root([1, -6, 11, -6]), 3.0, places=10)
        with self.assertRaises(ValueError):
            largest_real_root([5])

    def test_bisect_root(self):
        self.assertAlmostEqual(bisect_root([1, 0, -2], 0.0, 2.0), math.sqrt(2), places=10)
        with self.assertRaises(ValueError):
            bisect_root([1, 0, 1], -1.0, 1.0)

    def test_exact_evaluation(self):
        self.assertEqual(evaluate([1, -4, 3], Fraction(3)), 0)


class TestSignlessLaplacian(unittest.TestCase):
    def test_small_matrices(self):
        np.testing.assert_array_equal(signless_laplacian(complete(2)), [[1, 1], [1, 1]])
        np.testing.assert_array_equal(
            signless_laplacian(path(3)), [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
        )

    def test_row_sums_are_twice_the_degrees(self):
        for graph in (friendship(7), cycle(6), star(5)):
            np.testing.assert_array_equal(
                signless_laplacian(graph).sum(axis=1), 2 * np.array(graph.degrees())
            )

    def test_integer_characteristic_polynomial(self):
        self.assertEqual(signless_characteristic_polynomial(complete(2)), [1, -2, 0])


class TestEigensolver(unittest.TestCase):
    def test_jacobi_matches_numpy(self):
        rng = np.random.default_rng(11)
        a = rng.normal(size=(8, 8))
        a = a + a.T
        values, vectors, _ = jacobi_eigensystem(a)
        np.testing.assert_allclose(np.sort(values), np.linalg.eigvalsh(a), atol=1e-10)
        np.testing.assert_allclose(a @ vectors, vectors * values, atol=1e-9)

    def test_jacobi_tiny_off_diagonal(self):
        a = np.array([[1.0, 1.0, 1e-200], [1.0, 2.0, 0.0], [1e-200, 0.0, 3.0]])
        with np.errstate(over="raise", invalid="raise"):
            values, _, _ = jacobi_eigensystem(a)
        self.assertTrue(np.allclose(np.sort(values), np.linalg.eigvalsh(a), atol=1e-12))

    def test_jacobi_rejects_asymmetric(self):
        with self.assertRaises(ValueError):
            jacobi_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with self.assertRaises(ValueError):
            jacobi_eigensystem(np.zeros((2, 3)))

    def test_power_iteration(self):
        value, vector, _, residual = power_iteration(signless_laplacian(complete(5)))
        self.assertAlmostEqual(value, 8.0, places=9)
        self.assertLessEqual(residual, 1e-10)
        self.assertAlmostEqual(float(np.linalg.norm(vector)), 1.0)

    def test_known_values(self):
        self.assertAlmostEqual(q_max(complete(2)).q, 2.0, places=10)
        for n in range(3, 11):
            self.assertAlmostEqual(q_max(cycle(n)).q, 4.0, places=10)
        self.assertAlmostEqual(q_max(friendship(5)).q, (7 + math.sqrt(17)) / 2, places=9)
        self.assertAlmostEqual(q_max(Graph(1)).q, 0.0, places=12)

    def test_matches_numpy_on_small_graphs(self):
        for graph in small_graphs(6)[::3]:
            expected = np.linalg.eigvalsh(signless_laplacian(graph))[-1]
            result = q_max(graph)
            self.assertAlmostEqual(result.q, expected, places=9)
            self.assertLessEqual(result.residual, 1e-10)

    def test_eigenvector_properties(self):
        for graph in small_graphs(6)[1::4]:
            result = q_max(graph)
            self.assertAlmostEqual(float(np.linalg.norm(result.vector)), 1.0, places=12)
            first = next(x for x in result.vector if abs(x) > 1e-12)
            self.assertGreater(first, 0)
            self.assertGreaterEqual(result.q, 4 * graph.m / graph.n - 1e-9)
            if graph.is_connected() and graph.n > 1:
                self.assertTrue(result.is_positive)

    def test_power_estimate(self):
        result = q_max(friendship(7))
        self.assertAlmostEqual(result.power_estimate, result.q, places=6)
        self.assertIsNone(q_max(friendship(7), cross_check=False).power_estimate)


class TestSameSpectralRadius(unittest.TestCase):
    def test_equal_radii(self):
        triangles = complete(3).disjoint_union(complete(3))
        self.assertTrue(same_spectral_radius(triangles, complete(3)))
        self.assertTrue(same_spectral_radius(cycle(4), star(4)))
        self.assertTrue(same_spectral_radius(cycle(5), cycle(5)))

    def test_different_radii(self):
        self.assertFalse(same_spectral_radius(complete(3), path(3)))
        self.assertFalse(same_spectral_radius(cycle(4), path(4)))


if __name__ == "__main__":
    unittest.main()
