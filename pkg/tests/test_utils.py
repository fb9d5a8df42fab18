import math
from unittest import TestCase

from hankelab.utils import (MODULUS, ConvergenceError, OpenInterval, format_number,
                            is_nonpositive_integer, richardson)


class TestOpenInterval(TestCase):
    def test_membership(self):
        self.assertIn(0.5, MODULUS)
        self.assertNotIn(0.0, MODULUS)
        self.assertNotIn(1.0, MODULUS)
        self.assertNotIn('0.5', MODULUS)

    def test_check(self):
        self.assertEqual(0.25, OpenInterval(0, 1).check(0.25))
        self.assertRaises(ValueError, MODULUS.check, 1.5)
        self.assertRaises(ValueError, MODULUS.check, -0.2)


class TestRichardson(TestCase):
    def test_basel_series(self):
        sums = [math.fsum(1.0 / n ** 2 for n in range(1, 256 * 2 ** j + 1)) for j in range(5)]
        estimate, error = richardson(sums)
        self.assertAlmostEqual(math.pi ** 2 / 6, estimate, delta=1e-10)
        self.assertLess(error, 1e-8)
        # the plain partial sum is far off
        self.assertGreater(math.pi ** 2 / 6 - sums[-1], 1e-4)

    def test_single_sum(self):
        self.assertEqual((2.0, math.inf), richardson([2.0]))

    def test_empty(self):
        self.assertRaises(ValueError, richardson, [])


class TestHelpers(TestCase):
    def test_format_number(self):
        self.assertEqual('0.1', format_number(0.1))
        self.assertEqual(0.1 + 0.2, float(format_number(0.1 + 0.2)))

    def test_nonpositive_integer(self):
        self.assertTrue(is_nonpositive_integer(0))
        self.assertTrue(is_nonpositive_integer(-3.0))
        self.assertFalse(is_nonpositive_integer(-2.5))
        self.assertFalse(is_nonpositive_integer(1))

    def test_convergence_error(self):
        error = ConvergenceError('stalled', 30)
        self.assertEqual(30, error.iterations)
        self.assertIsInstance(error, RuntimeError)
