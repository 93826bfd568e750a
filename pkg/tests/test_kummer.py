import unittest

from metajacobi.algebra import KummerTag, kummer_solution, kummer_u4_alternate
from metajacobi.errors import DomainError
from metajacobi.poly import askey_p, eval_poly
from metajacobi.scalar import Params, pochhammer


class KummerTestCase(unittest.TestCase):

    def test_u1_terminates(self):
        self.assertEqual(1, kummer_solution(KummerTag.U1, 0, 1.7, 0.7, 0.4))

    def test_u1_is_askey(self):
        p = Params(0.7, 0.3)
        for z in (0.3 + 0.4j, -0.5, 2.5):
            expected = eval_poly(askey_p(2, p), z) * pochhammer(1.7, 2) / pochhammer(0.3, 2)
            got = kummer_solution(KummerTag.U1, -2, 1.7, 1 - 0.3 - 2, z)
            self.assertLess(abs(got - expected), 1e-12 * (1 + abs(expected)))

    def test_u1_series(self):
        self.assertAlmostEqual(0.7 ** -0.5, kummer_solution(KummerTag.U1, 0.5, 1.7, 1.7, 0.3).real, places=13)

    def test_u3_binomial(self):
        # c = b collapses the series to 1
        self.assertAlmostEqual(2 ** -0.5, kummer_solution(KummerTag.U3, 0.5, 1.2, 1.2, -1).real, places=14)

    def test_u4_alternate_form(self):
        a, b = 0.7, 0.3
        for m in range(6):
            u4 = kummer_solution(KummerTag.U4, m + 1, 1 - a, m + b + 2, -1)
            alternate = kummer_u4_alternate(m + 1, 1 - a, m + b + 2, -1)
            self.assertLess(abs(u4 - alternate), 1e-10 * (1 + abs(alternate)))

    def test_branch_points(self):
        with self.assertRaises(DomainError):
            kummer_solution(KummerTag.U3, 0.5, 0.2, 1.3, 1)
        with self.assertRaises(DomainError):
            kummer_u4_alternate(0.5, 0.2, 1.3, 0)

    def test_outside_disk(self):
        with self.assertRaises(DomainError):
            kummer_solution(KummerTag.U1, 0.5, 0.2, 1.3, 1.5)


if __name__ == '__main__':
    unittest.main()
