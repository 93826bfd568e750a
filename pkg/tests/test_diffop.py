import unittest

import numpy as np

from metajacobi.algebra import (DiffOp, compose, bracket, apply_op, formal_adjoint, GeneratorTag, realize, to_su11,
                                from_su11, hypergeometric_operator)
from metajacobi.errors import DegreeCapError
from metajacobi.poly import PolyCoeffs, askey_p, shifted_power
from metajacobi.scalar import Params

P = Params(0.7, 0.3)


class DiffOpTestCase(unittest.TestCase):

    def test_pruning(self):
        op = DiffOp({(1, 0): 1e-17, (0, 1): 2})
        self.assertEqual({(0, 1): 2}, dict(op.terms))

    def test_leibniz(self):
        self.assertEqual(DiffOp({(1, 1): 1, (0, 0): 1}), compose(DiffOp.d(), DiffOp.z()))
        self.assertEqual(DiffOp.identity(), bracket(DiffOp.d(), DiffOp.z()))

    def test_second_derivative(self):
        # ∂² z² = z²∂² + 4z∂ + 2
        self.assertEqual(DiffOp({(2, 2): 1, (1, 1): 4, (0, 0): 2}), compose(DiffOp.d(2), DiffOp.z(2)))

    def test_associativity(self):
        a, b, c = realize(GeneratorTag.L, P), realize(GeneratorTag.M, P), realize(GeneratorTag.X, P)
        self.assertEqual((a @ b) @ c, a @ (b @ c))

    def test_seeded_associativity(self):
        rng = np.random.default_rng(7)

        def random_op() -> DiffOp:
            shape = (4, 4)
            coeffs = rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)
            return DiffOp({(p, q): coeffs[p, q] for p in range(shape[0]) for q in range(shape[1])})

        for _ in range(20):
            a, b, c = random_op(), random_op(), random_op()
            left, right = (a @ b) @ c, a @ (b @ c)
            self.assertLess((left - right).max_abs() / (1 + left.max_abs()), 1e-13)

    def test_anticommutator(self):
        x = DiffOp.z()
        self.assertEqual(DiffOp({(2, 0): 2}), bracket(x, x, anti=True))

    def test_degree_cap(self):
        with self.assertRaises(DegreeCapError):
            compose(DiffOp.z(40), DiffOp.z(40))

    def test_apply(self):
        p = PolyCoeffs([0, 0, 1])
        np.testing.assert_allclose([0, 2], apply_op(DiffOp.d(), p).coeffs)
        np.testing.assert_allclose([0, 0, 0, 1], apply_op(DiffOp.z(), p).coeffs)
        np.testing.assert_allclose([0], apply_op(DiffOp.d(3), p).coeffs)

    def test_apply_matches_compose(self):
        a, b = realize(GeneratorTag.M, P), realize(GeneratorTag.L, P)
        p = askey_p(4, P)
        left = apply_op(compose(a, b), p)
        right = apply_op(a, apply_op(b, p))
        self.assertLess((left - right).max_abs(), 1e-12)

    def test_adjoint(self):
        self.assertEqual(-DiffOp.d(), formal_adjoint(DiffOp.d()))
        self.assertEqual(DiffOp.z(), formal_adjoint(DiffOp.z()))
        # (z∂)ᵀ = -∂z = -z∂ - 1
        self.assertEqual(DiffOp({(1, 1): -1, (0, 0): -1}), formal_adjoint(DiffOp({(1, 1): 1})))

    def test_adjoint_involution(self):
        m = realize(GeneratorTag.M, P)
        self.assertEqual(m, formal_adjoint(formal_adjoint(m)))

    def test_scalar_arithmetic(self):
        op = DiffOp.d() + 2
        self.assertEqual(DiffOp({(0, 1): 1, (0, 0): 2}), op)
        self.assertEqual(DiffOp({(0, 1): -1, (0, 0): -1}), 1 - op)


class RealizationTestCase(unittest.TestCase):

    def test_generators(self):
        self.assertEqual(DiffOp({(1, 0): 1}), realize(GeneratorTag.X, P))
        self.assertEqual(DiffOp({(1, 1): 1, (0, 1): -1, (0, 0): 1.7}), realize(GeneratorTag.L, P))
        self.assertEqual(DiffOp({(1, 1): 1, (0, 1): -1, (0, 0): 1.0}), realize(GeneratorTag.J0, P))

    def test_derived_generators(self):
        l, m, x = (realize(t, P) for t in (GeneratorTag.L, GeneratorTag.M, GeneratorTag.X))
        self.assertEqual(x @ l, realize(GeneratorTag.R, P))
        self.assertEqual(x @ m, realize(GeneratorTag.RTILDE, P))

    def test_su11_roundtrip(self):
        l, m, x = (realize(t, P) for t in (GeneratorTag.L, GeneratorTag.M, GeneratorTag.X))
        back = from_su11(*to_su11(l, m, x, P), P)
        self.assertEqual((l, m, x), back)

    def test_su11_matches_barut_girardello(self):
        l, m, x = (realize(t, P) for t in (GeneratorTag.L, GeneratorTag.M, GeneratorTag.X))
        j0, jplus, jminus = to_su11(l, m, x, P)
        self.assertEqual(realize(GeneratorTag.J0, P), j0)
        self.assertEqual(realize(GeneratorTag.JPLUS, P), jplus)
        self.assertEqual(realize(GeneratorTag.JMINUS, P), jminus)

    def test_casimir_is_scalar(self):
        q = realize(GeneratorTag.CASIMIR_Q, P)
        self.assertEqual(DiffOp.scalar(P.casimir), q)

    def test_hypergeometric_operator(self):
        # H(-n, α+1; 1-β-n) annihilates the Askey polynomial P_n
        for n in range(6):
            h = hypergeometric_operator(-n, P.alpha + 1, 1 - P.beta - n)
            self.assertLess(apply_op(h, askey_p(n, P)).max_abs(), 1e-11)

    def test_l_on_shifted_powers(self):
        # L (z-1)^k = (k+α+1)(z-1)^k
        l = realize(GeneratorTag.L, P)
        for k in range(5):
            image = apply_op(l, shifted_power(k))
            self.assertLess((image - shifted_power(k) * (k + 1.7)).max_abs(), 1e-12)


if __name__ == '__main__':
    unittest.main()
