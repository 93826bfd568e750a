import math
import unittest

import numpy as np

from metajacobi.errors import ParameterError, ConvergenceError
from metajacobi.quadrature import (QuadratureSpec, DEFAULT_QUADRATURE, OrthogonalityReport, circle_rule,
                                   circle_integral, interval_integral)
from metajacobi.quadrature.rules import circle_nodes, tanh_sinh_nodes
from metajacobi.scalar import cpow, gamma_ratio


class QuadratureSpecTestCase(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(12, DEFAULT_QUADRATURE.panels)
        self.assertEqual(16, DEFAULT_QUADRATURE.nodes_per_panel)
        self.assertEqual(1e-10, DEFAULT_QUADRATURE.target_tol)

    def test_guards(self):
        for changes in ({'panels': 3}, {'nodes_per_panel': 4}, {'target_tol': 1e-15}, {'interval_levels': 2},
                        {'max_refinements': 0}):
            with self.subTest(**changes):
                with self.assertRaises(ParameterError):
                    DEFAULT_QUADRATURE.replace(**changes)

    def test_replace(self):
        spec = DEFAULT_QUADRATURE.replace(panels=8)
        self.assertEqual(8, spec.panels)
        self.assertEqual(12, DEFAULT_QUADRATURE.panels)


class ReportTestCase(unittest.TestCase):

    def test_diagonal(self):
        report = OrthogonalityReport.build(1, 1, 2.0 + 1e-9, 2.0, 2.0, 4.0)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(5e-10, report.rel_residual, places=15)
        self.assertEqual(2.0, report.condition)

    def test_off_diagonal(self):
        report = OrthogonalityReport.build(0, 1, 1e-6, 0.0, 1.0, 1.0)
        self.assertFalse(report.passed)
        self.assertEqual(1e-8, report.tolerance)

    def test_conditioning(self):
        # a badly conditioned integrand relaxes the threshold to the rounding floor
        report = OrthogonalityReport.build(0, 1, 1e-6, 0.0, 1.0, 1e9)
        self.assertTrue(report.passed)


class CircleRuleTestCase(unittest.TestCase):

    def test_nodes(self):
        theta, weights = circle_nodes(6, 8)
        self.assertAlmostEqual(2 * math.pi, math.fsum(weights), places=13)
        self.assertTrue(np.all(np.diff(theta) > 0))
        self.assertTrue(np.all(np.abs(theta) < math.pi))

    def test_residue(self):
        self.assertAlmostEqual(1.0, circle_integral(lambda z: 1 / z), places=13)

    def test_analytic(self):
        for k in range(4):
            self.assertLess(abs(circle_integral(lambda z, k=k: z ** k)), 1e-13)

    def test_singular_weight(self):
        def f(z):
            return cpow(-z, -1.3) * cpow(1 - z, 1.0)

        result = circle_rule(f)
        reference = circle_rule(f, DEFAULT_QUADRATURE.replace(panels=24, nodes_per_panel=24, target_tol=1e-12))
        self.assertLess(abs(result.value - reference.value), 1e-10 * result.magnitude)
        self.assertGreater(result.levels, DEFAULT_QUADRATURE.panels)

    def test_no_convergence(self):
        def rough(z):
            return np.abs(np.angle(z)) ** -0.999

        with self.assertRaises(ConvergenceError):
            circle_rule(rough, DEFAULT_QUADRATURE.replace(panels=4, max_refinements=1, target_tol=1e-13))


class IntervalRuleTestCase(unittest.TestCase):

    def test_nodes(self):
        x, weights = tanh_sinh_nodes(3)
        self.assertTrue(np.all((x >= 0) & (x <= 1)))
        self.assertAlmostEqual(1.0, math.fsum(weights), places=12)

    def test_constant(self):
        self.assertAlmostEqual(1.0, interval_integral(lambda x: np.ones_like(x)), places=12)

    def test_beta_function(self):
        expected = gamma_ratio([0.7, 2.0], [2.7]).real
        got = interval_integral(lambda x: np.ones_like(x), exponents=(-0.3, 1.0))
        self.assertAlmostEqual(expected, got, delta=1e-10 * expected)

    def test_polynomial(self):
        got = interval_integral(lambda x: x ** 2)
        self.assertAlmostEqual(1 / 3, got, places=12)


if __name__ == '__main__':
    unittest.main()
