import math
import unittest

from theta_spectra.graphs import cone_over_triangles, friendship, split_star, split_star_plus
from theta_spectra.spectral import (
    CubicSpec,
    closed_q_friendship,
    closed_q_splitstar2,
    closed_q_splitstarplus1,
    friendship_cubic,
    q_cone_over_triangles,
    q_max,
    split_star_plus_cubic,
)
from theta_spectra.spectral.polynomials import evaluate


class TestRadicalForms(unittest.TestCase):
    def test_split_star(self):
        self.assertAlmostEqual(closed_q_splitstar2(6), 4 + 2 * math.sqrt(3), places=12)

    def test_odd_friendship(self):
        self.assertAlmostEqual(closed_q_friendship(5), (7 + math.sqrt(17)) / 2, places=12)
        self.assertAlmostEqual(closed_q_friendship(3), 4.0, places=12)

    def test_cone(self):
        self.assertAlmostEqual(q_cone_over_triangles(7), 8.0, places=12)
        self.assertAlmostEqual(q_cone_over_triangles(4), 6.0, places=12)


class TestCubics(unittest.TestCase):
    def test_coefficients(self):
        self.assertEqual(friendship_cubic(6).polynomial, [1, -9, 18, -8])
        self.assertEqual(split_star_plus_cubic(6).polynomial, [1, -9, 18, -4])

    def test_even_friendship_root(self):
        value = closed_q_friendship(6)
        self.assertTrue(6 + 2 / 6 < value < 6 + 2 / 5)
        self.assertAlmostEqual(evaluate([1, -9, 18, -8], value), 0.0, places=9)

    def test_split_star_plus_root(self):
        value = closed_q_splitstarplus1(6)
        self.assertTrue(6 < value < 7)
        self.assertAlmostEqual(evaluate([1, -9, 18, -4], value), 0.0, places=9)

    def test_bracket_is_widened(self):
        cubic = CubicSpec((-6, 11, -6), (3.5, 3.6))
        self.assertAlmostEqual(cubic.largest_root(), 3.0, places=10)
        self.assertFalse(cubic.has_sign_change(3.5, 3.6))


class TestSandwichBounds(unittest.TestCase):
    def test_friendship(self):
        for n in range(5, 41, 2):
            value = closed_q_friendship(n)
            self.assertTrue(n + 2 / (n - 1) < value < n + 2 / (n - 2), n)
        for n in range(4, 41, 2):
            value = closed_q_friendship(n)
            self.assertTrue(n + 2 / n < value < n + 2 / (n - 1), n)

    def test_split_star(self):
        for n in range(4, 41):
            self.assertGreater(closed_q_splitstar2(n), n + 2 - 4 / (n + 1))

    def test_split_star_plus(self):
        for n in range(4, 41):
            self.assertTrue(n < closed_q_splitstarplus1(n) < n + 1, n)

    def test_friendship_below_split_star(self):
        for n in range(5, 41):
            self.assertLess(closed_q_friendship(n), closed_q_splitstar2(n))
            self.assertLess(closed_q_splitstarplus1(n), closed_q_splitstar2(n))

    def test_cone_below_split_star(self):
        for n in range(7, 41, 3):
            self.assertLess(q_cone_over_triangles(n), closed_q_splitstar2(n))


class TestNumericAgreement(unittest.TestCase):
    def test_families(self):
        orders = list(range(4, 16)) + [23, 31, 40]
        for n in orders:
            self.assertAlmostEqual(
                q_max(friendship(n), cross_check=False).q, closed_q_friendship(n), delta=1e-8
            )
            self.assertAlmostEqual(
                q_max(split_star(n, 2), cross_check=False).q, closed_q_splitstar2(n), delta=1e-8
            )
            self.assertAlmostEqual(
                q_max(split_star_plus(n, 1), cross_check=False).q,
                closed_q_splitstarplus1(n),
                delta=1e-8,
            )

    def test_cone(self):
        for n in (4, 7, 10, 13):
            self.assertAlmostEqual(
                q_max(cone_over_triangles(n), cross_check=False).q,
                q_cone_over_triangles(n),
                delta=1e-8,
            )


class TestDomains(unittest.TestCase):
    def test_errors(self):
        with self.assertRaises(ValueError):
            closed_q_friendship(2)
        with self.assertRaises(ValueError):
            closed_q_splitstar2(3)
        with self.assertRaises(ValueError):
            closed_q_splitstarplus1(3)
        with self.assertRaises(ValueError):
            q_cone_over_triangles(8)
        with self.assertRaises(ValueError):
            q_cone_over_triangles(1)


if __name__ == "__main__":
    unittest.main()
