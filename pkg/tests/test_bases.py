import unittest

from metajacobi.errors import ParameterError, DegenerateParameterError
from metajacobi.repmod import (ModuleVector, pairing, ModuleTag, act, GaugeChoice, D0Rule, gevp_p_coeffs,
                               gevp_q_coeffs, evp_j_coeffs, NegativeKind, negative_index_coeffs, negative_index_norm,
                               biorth_norm)
from metajacobi.repmod.bases import checked_ratio
from metajacobi.scalar import Params

P = Params(0.7, 0.3)
# alpha + beta off the integers, so the flipped pair stays generic
FLIPPABLE = Params(0.7, 0.45)


def relative_defect(u: ModuleVector, v: ModuleVector, expected: complex) -> float:
    return abs(pairing(u, v) - expected) / (1 + abs(expected))


class GaugeTestCase(unittest.TestCase):

    def test_constraint(self):
        GaugeChoice(a=2, a_tilde=1)
        with self.assertRaises(ParameterError):
            GaugeChoice(a=1, a_tilde=1)

    def test_d_n0(self):
        self.assertAlmostEqual(6 / (1.7 * 2.7), GaugeChoice().d_n0(2, P).real, places=14)
        self.assertEqual(1, GaugeChoice(d_n0_rule=D0Rule.UNIT).d_n0(2, P))

    def test_checked_ratio(self):
        self.assertEqual(2, checked_ratio(4, 2))
        with self.assertRaises(DegenerateParameterError):
            checked_ratio(1, 0)


class GevpCoefficientsTestCase(unittest.TestCase):

    def test_p_coefficients(self):
        self.assertEqual({0: 1}, dict(gevp_p_coeffs(0, P).items()))
        d = gevp_p_coeffs(2, P)
        self.assertEqual((0, 1, 2), d.support)
        self.assertAlmostEqual(6 / (1.7 * 2.7), d[0].real, places=14)
        self.assertAlmostEqual(6 / (1.7 * 2.7) * 1.7, d[1].real, places=14)
        for n in range(1, 10):
            self.assertAlmostEqual(1.0, gevp_p_coeffs(n, P)[n].real, places=12)

    def test_q_coefficients(self):
        self.assertEqual(1, gevp_q_coeffs(3, P)[3])
        self.assertAlmostEqual(-6 / 3.7, gevp_q_coeffs(1, P)[2].real, places=14)
        self.assertAlmostEqual(6 / 9.99, gevp_q_coeffs(0, P)[2].real, places=14)
        self.assertEqual(11, len(gevp_q_coeffs(0, P, lmax=10)))

    def test_defining_equations(self):
        for n in range(6):
            d = gevp_p_coeffs(n, P)
            residual = act(ModuleTag.M, d, P) - n * act(ModuleTag.L, d, P)
            self.assertLess(residual.max_abs(), 1e-12)

    def test_dual_defining_equations_interior(self):
        for m in range(6):
            d = gevp_q_coeffs(m, P, lmax=20)
            mv = act(ModuleTag.MT, d, P)
            residual = mv - m * act(ModuleTag.LT, d, P)
            # only the first index past the truncation may fail
            interior = max((abs(c) for k, c in residual.items() if k != m + 21), default=0.0)
            self.assertLess(interior / (1 + mv.max_abs()), 1e-11)

    def test_negative_index_rejected(self):
        with self.assertRaises(ValueError):
            gevp_p_coeffs(-1, P)


class EvpCoefficientsTestCase(unittest.TestCase):

    def test_values(self):
        self.assertEqual({0: 1}, dict(evp_j_coeffs(0, P).items()))
        self.assertAlmostEqual(1.35, evp_j_coeffs(1, P)[1].real, places=14)
        self.assertAlmostEqual(-6 / 4.7, evp_j_coeffs(1, P, dual=True)[2].real, places=14)

    def test_eigenvectors(self):
        for n in range(6):
            f = evp_j_coeffs(n, P)
            residual = act(ModuleTag.M, f, P) - n * (n + 1.7) * f
            self.assertLess(residual.max_abs(), 1e-10)

    def test_orthogonality(self):
        lmax = 60
        for n in range(5):
            for m in range(5):
                expected = biorth_norm(n, P, jacobi=True) if n == m else 0
                defect = relative_defect(evp_j_coeffs(n, P), evp_j_coeffs(m, P, dual=True, lmax=lmax), expected)
                self.assertLess(defect, 1e-11)


class BiorthogonalityTestCase(unittest.TestCase):

    def test_norms(self):
        self.assertAlmostEqual(1.7, biorth_norm(0, P).real, places=14)
        self.assertAlmostEqual(6.7, biorth_norm(5, P).real, places=12)
        self.assertEqual(1, biorth_norm(0, P, jacobi=True))

    def test_pairings(self):
        for n in range(8):
            for m in range(8):
                right = act(ModuleTag.LT, gevp_q_coeffs(m, P, lmax=12), P)
                expected = biorth_norm(n, P) if n == m else 0
                self.assertLess(relative_defect(gevp_p_coeffs(n, P), right, expected), 1e-11)

    def test_off_diagonal(self):
        right = act(ModuleTag.LT, gevp_q_coeffs(1, P, lmax=4), P)
        self.assertLess(abs(pairing(gevp_p_coeffs(3, P), right)), 1e-12)


class NegativeIndexTestCase(unittest.TestCase):

    def test_gauge(self):
        self.assertEqual(1, negative_index_coeffs(-1, NegativeKind.P, P)[-1])
        self.assertEqual({-1: 1}, dict(negative_index_coeffs(-1, NegativeKind.Q, FLIPPABLE).items()))
        self.assertEqual((-3, -2, -1), negative_index_coeffs(-3, NegativeKind.Q, FLIPPABLE).support)

    def test_flip_map(self):
        flipped = P.flipped()
        left = negative_index_coeffs(-3, NegativeKind.P, P, lmax=4)
        right = gevp_q_coeffs(2, flipped, lmax=4)
        for l in range(5):
            self.assertAlmostEqual(right[2 + l].real, left[-3 - l].real, places=13)

    def test_pairings(self):
        for n in range(-4, 0):
            for m in range(-4, 0):
                left = negative_index_coeffs(n, NegativeKind.P, FLIPPABLE, lmax=10)
                right = act(ModuleTag.LT, negative_index_coeffs(m, NegativeKind.Q, FLIPPABLE), FLIPPABLE)
                expected = negative_index_norm(n, FLIPPABLE) if n == m else 0
                self.assertLess(relative_defect(left, right, expected), 1e-12)

    def test_mixed_signs(self):
        # negative-index P against non-negative Q never overlap in support
        left = negative_index_coeffs(-2, NegativeKind.P, P, lmax=10)
        right = act(ModuleTag.LT, gevp_q_coeffs(1, P, lmax=10), P)
        self.assertEqual(0, pairing(left, right))

    def test_degenerate_flip(self):
        # alpha + beta = 1 sends the flipped alpha + beta + 1 to zero
        with self.assertRaises(ParameterError):
            negative_index_coeffs(-3, NegativeKind.Q, P)
        with self.assertRaises(ParameterError):
            negative_index_norm(-2, P)

    def test_kind(self):
        self.assertEqual(dict(negative_index_coeffs(-2, NegativeKind.P, P, lmax=3).items()),
                         dict(negative_index_coeffs(-2, 'P', P, lmax=3).items()))
        with self.assertRaises(ValueError):
            negative_index_coeffs(-1, 'R', P)
        with self.assertRaises(ValueError):
            negative_index_coeffs(0, NegativeKind.P, P)


if __name__ == '__main__':
    unittest.main()
