import cmath
import math
import unittest

from metajacobi.errors import ParameterError, PoleError, DomainError, DegenerateParameterError
from metajacobi.scalar import (Params, pochhammer, log_gamma, gamma, gamma_ratio, cpow, hyp2f1_terminating,
                               hyp2f1_series, hyp2f1, is_integer)


class ParamsTestCase(unittest.TestCase):

    def test_tau_and_casimir(self):
        p = Params(0.7, 0.3)
        self.assertAlmostEqual(1.0, p.tau, places=15)
        self.assertAlmostEqual(2 * 0.7 * 0.3 - 0.7 + 0.3 - 1, p.casimir, places=15)

    def test_generic_guard(self):
        with self.assertRaises(ParameterError):
            Params(0.7, 1.0)
        with self.assertRaises(ParameterError):
            Params(-2.0, 0.3)
        with self.assertRaises(ParameterError):
            Params(-1.5, -0.5)
        with self.assertRaises(ParameterError):
            Params(float('nan'), 0.3)

    def test_integer_guard_tolerance(self):
        self.assertTrue(is_integer(2 + 1e-13))
        self.assertFalse(is_integer(2 + 1e-9))

    def test_relaxed_construction(self):
        p = Params(0.7, 1.0, strict=False)
        self.assertEqual(1.0, p.beta)

    def test_derived_pairs(self):
        p = Params(0.7, 0.3)
        self.assertEqual(Params(0.3, 0.7), p.swapped())
        flipped = p.flipped()
        self.assertAlmostEqual(-1.7, flipped.alpha, places=15)
        self.assertAlmostEqual(0.7, flipped.beta, places=15)


class PochhammerTestCase(unittest.TestCase):

    def test_values(self):
        self.assertEqual(1, pochhammer(2.5, 0))
        self.assertEqual(24, pochhammer(1, 4))
        self.assertAlmostEqual(1.875, pochhammer(0.5, 3), places=15)

    def test_zero_factor(self):
        self.assertEqual(0, pochhammer(-2, 5))

    def test_split(self):
        for x in (0.3, -1.7, 2.5 + 0.5j):
            for k in range(5):
                for l in range(5):
                    whole = pochhammer(x, k + l)
                    split = pochhammer(x, k) * pochhammer(x + k, l)
                    self.assertLessEqual(abs(whole - split), 1e-13 * max(1.0, abs(whole)))


class GammaTestCase(unittest.TestCase):

    def test_log_gamma(self):
        self.assertAlmostEqual(0.0, abs(log_gamma(1)), places=13)
        self.assertAlmostEqual(0.5723649429247001, log_gamma(0.5).real, places=12)
        self.assertAlmostEqual(math.lgamma(30.5), log_gamma(30.5).real, delta=1e-12 * math.lgamma(30.5))

    def test_factorials(self):
        for n in range(1, 15):
            self.assertAlmostEqual(1.0, abs(gamma(n + 1)) / math.factorial(n), places=12)

    def test_reflection(self):
        for x in (0.3, -2.4, 1.75, -0.1):
            value = cmath.exp(log_gamma(x) + log_gamma(1 - x)) * math.sin(math.pi * x)
            self.assertLessEqual(abs(value - math.pi), 1e-12 * math.pi)

    def test_negative_argument(self):
        self.assertAlmostEqual(math.gamma(-1.5), gamma(-1.5).real, places=12)
        self.assertAlmostEqual(0.0, gamma(-1.5).imag, places=12)

    def test_poles(self):
        for x in (0, -1, -7):
            with self.assertRaises(PoleError):
                log_gamma(x)

    def test_ratio(self):
        expected = math.gamma(0.7) * math.gamma(2.0) / math.gamma(2.7)
        self.assertAlmostEqual(expected, gamma_ratio([0.7, 2.0], [2.7]).real, places=13)
        self.assertAlmostEqual(0.0, gamma_ratio([150.5], [151.5]).real - 1 / 150.5, places=14)


class PowerTestCase(unittest.TestCase):

    def test_principal_branch(self):
        # (-z)^s is real on the negative axis
        value = cpow(-(-1 + 0j), 0.3)
        self.assertAlmostEqual(1.0, value.real, places=15)
        self.assertAlmostEqual(0.0, value.imag, places=15)

    def test_integer_exponent(self):
        self.assertAlmostEqual(0.25, abs(cpow(2j, -2)), places=15)


class HypergeometricTestCase(unittest.TestCase):

    def test_terminating(self):
        self.assertEqual(1, hyp2f1_terminating(0, 0.4, 1.6, 0.8))
        self.assertAlmostEqual(0.5, hyp2f1_terminating(1, 2, 4, 1).real, places=15)
        self.assertAlmostEqual(1 / 3, hyp2f1_terminating(2, 1, 2, 1).real, places=15)

    def test_terminating_degenerate(self):
        with self.assertRaises(DegenerateParameterError):
            hyp2f1_terminating(3, 0.5, -1, 0.5)

    def test_series(self):
        self.assertEqual(1, hyp2f1_series(0.5, 1.7, 1.7, 0))
        self.assertAlmostEqual(0.7 ** -0.5, hyp2f1_series(0.5, 1.7, 1.7, 0.3).real, places=13)
        self.assertLessEqual(abs(hyp2f1_terminating(3, 0.4, 1.6, 0.8) - hyp2f1_series(-3, 0.4, 1.6, 0.8)), 1e-13)

    def test_series_domain(self):
        with self.assertRaises(DomainError):
            hyp2f1_series(0.5, 0.5, 1.5, 1.0)

    def test_series_matches_terminating(self):
        for n in range(0, 21, 5):
            for z in (0.9, -0.9, 0.6j, 0.5 + 0.5j):
                expected = hyp2f1_terminating(n, 0.4, 1.6, z)
                self.assertLessEqual(abs(hyp2f1_series(-n, 0.4, 1.6, z) - expected), 1e-13 * (1 + abs(expected)))

    def test_dispatch(self):
        # terminating branch is used outside the unit disk
        self.assertAlmostEqual(1 - 0.4 * 3 / 1.6, hyp2f1(-1, 0.4, 1.6, 3).real, places=14)


if __name__ == '__main__':
    unittest.main()
