import cmath
import unittest

import numpy as np

from metajacobi.algebra import GeneratorTag, realize, apply_op
from metajacobi.errors import DomainError, ConvergenceError
from metajacobi.poly import askey_p, jacobi_phat, eval_poly, taylor_shift, shifted_power
from metajacobi.repmod import (OverlapKind, SplitKind, overlap, overlap_closed_form, jacobi_overlap_normalization,
                               transpose_consistency, GaugeChoice, gevp_p_coeffs)
from metajacobi.scalar import Params, hyp2f1
from metajacobi.suites import split_points, term_scale

P = Params(0.7, 0.3)


class PolynomialOverlapTestCase(unittest.TestCase):

    def test_constant(self):
        self.assertAlmostEqual(1.0, overlap(OverlapKind.P, 0, 0.3 + 0.2j, P), places=15)

    def test_askey(self):
        z = cmath.exp(2j * cmath.pi / 7)
        self.assertLess(abs(overlap(OverlapKind.P, 4, z, P) - eval_poly(askey_p(4, P), z)), 1e-12)

    def test_jacobi(self):
        for n in range(6):
            z = 0.4 - 0.3j
            got = overlap(OverlapKind.J, n, z, P) / jacobi_overlap_normalization(n, P)
            self.assertLess(abs(got - eval_poly(jacobi_phat(n, P), z)), 1e-12)

    def test_gauge_factor(self):
        gauge = GaugeChoice(gamma_tilde=2, a=2, a_tilde=1)
        z = 0.5 + 0.5j
        plain = overlap(OverlapKind.P, 3, z, P)
        self.assertLess(abs(overlap(OverlapKind.P, 3, z, P, gauge) - 2 * (z - 1) * plain), 1e-13)

    def test_high_degree(self):
        # the (z-1) expansion of P_12 cancels heavily on the unit circle
        d = gevp_p_coeffs(12, P)
        askey = askey_p(12, P)
        for j in range(32):
            z = cmath.exp(2j * cmath.pi * (j + 0.5) / 32)
            error = abs(overlap(OverlapKind.P, 12, z, P) - eval_poly(askey, z))
            self.assertLess(error / (1 + term_scale(d, z)), 1e-11)


class DualOverlapTestCase(unittest.TestCase):

    def test_qlt_closed_form(self):
        m, z = 2, -1.0
        expected = (m + 1.7) * (z - 1) ** (-m - 1) * hyp2f1(m + 1, m + 2.0, m + 1.7, 1 / (1 - z))
        got = overlap(OverlapKind.QLT, m, z, P, lmax=200)
        self.assertLess(abs(got - expected), 1e-11 * abs(expected))

    def test_series_domain(self):
        with self.assertRaises(DomainError):
            overlap(OverlapKind.QLT, 0, 0.5, P)
        with self.assertRaises(DomainError):
            overlap(OverlapKind.JTILDE, 0, 1.5, P)

    def test_lmax_growth(self):
        # a tiny starting lmax is extended until the tail is negligible
        self.assertLess(abs(overlap(OverlapKind.QLT, 1, -2.0, P, lmax=4) - overlap(OverlapKind.QLT, 1, -2.0, P)),
                        1e-12)

    def test_no_convergence(self):
        with self.assertRaises(ConvergenceError):
            overlap(OverlapKind.QLT, 0, -1e-4, P)


class SplitOverlapTestCase(unittest.TestCase):

    def test_qlt_split(self):
        for m in range(3):
            z = -0.5
            regular, weighted = overlap_closed_form(SplitKind.QLT_SPLIT, m, z, P)
            series = overlap(OverlapKind.QLT, m, z, P)
            self.assertLess(abs(regular + weighted - series), 1e-10 * (1 + abs(series)))

    def test_jtilde_split(self):
        for m in range(2):
            for z in (-0.5, -0.4 + 0.3j):
                series = overlap(OverlapKind.JTILDE, m, z, P)
                closed = sum(overlap_closed_form(SplitKind.JTILDE_SPLIT, m, z, P))
                self.assertLess(abs(closed - series), 1e-10 * (1 + abs(series)))

    def test_jtilde_split_all_degrees(self):
        for m in range(6):
            for z in split_points():
                series = overlap(OverlapKind.JTILDE, m, z, P)
                regular, weighted = overlap_closed_form(SplitKind.JTILDE_SPLIT, m, z, P)
                scale = max(abs(series), abs(regular) + abs(weighted))
                self.assertLess(abs(regular + weighted - series) / (1 + scale), 1e-10)

    def test_branch_points(self):
        for z in (0, 1):
            with self.assertRaises(DomainError):
                overlap_closed_form(SplitKind.QLT_SPLIT, 0, z, P)


class TransposeTestCase(unittest.TestCase):

    def test_consistency(self):
        self.assertLess(transpose_consistency(3, P), 1e-12)
        self.assertLess(transpose_consistency(6, Params(-0.4, 1.6)), 1e-11)

    def test_too_small(self):
        with self.assertRaises(ValueError):
            transpose_consistency(2, P)

    def test_x_on_shifted_powers(self):
        image = taylor_shift(apply_op(realize(GeneratorTag.X, P), shifted_power(2)), 1)
        np.testing.assert_allclose([0, 0, 1, 1], image.coeffs, atol=1e-14)


if __name__ == '__main__':
    unittest.main()
