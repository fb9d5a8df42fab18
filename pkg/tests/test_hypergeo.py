import math
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose
from scipy.integrate import quad
from scipy.special import hyp2f1

from hankelab.hypergeo import (HypergeoArgs, connection_check, contiguous_check, euler_transform,
                               gamma_ratio, gauss_2f1, log_pochhammer, moment_asymptotic, moment_E,
                               moment_F, pfaff_transform, pochhammer, quadratic_identity_check,
                               quadratic_identity_rhs)


CASES = [
    (0.5, 0.5, 1.5, 0.25),
    (1.0, 1.0, 2.0, -0.6),
    (1.3, 0.7, 2.1, 0.4),
    (3.3, 3.3, 1.2, 0.9),
    (20.5, 0.5, 22.0, 0.25),
    (200.5, -0.5, 201.0, 0.64),
    (-3.0, 1.7, 0.4, 0.8),
    (2.5, 1.5, 0.3, -0.95),
]


class TestGauss2F1(TestCase):
    def test_against_scipy(self):
        for a, b, c, z in CASES:
            assert_allclose(gauss_2f1(a, b, c, z), hyp2f1(a, b, c, z), rtol=1e-11,
                            err_msg='2F1(%r, %r; %r; %r)' % (a, b, c, z))

    def test_elementary(self):
        assert_allclose(gauss_2f1(0.5, 0.5, 1.5, 0.25), math.asin(0.5) / 0.5, rtol=1e-15)
        z = 0.7
        assert_allclose(gauss_2f1(1.0, 1.0, 2.0, z), -math.log(1.0 - z) / z, rtol=1e-14)
        self.assertEqual(1.0, gauss_2f1(2.0, 3.0, 4.0, 0.0))

    def test_transforms(self):
        for a, b, c, z in CASES[:4]:
            assert_allclose(euler_transform(a, b, c, z), hyp2f1(a, b, c, z), rtol=1e-11)
        for a, b, c, z in CASES[:3]:
            assert_allclose(pfaff_transform(a, b, c, z), hyp2f1(a, b, c, z), rtol=1e-11)
        self.assertRaises(ValueError, pfaff_transform, 1.0, 1.0, 2.0, 0.6)

    def test_domain(self):
        self.assertRaises(ValueError, gauss_2f1, 1.0, 1.0, 0.0, 0.5)
        self.assertRaises(ValueError, gauss_2f1, 1.0, 1.0, -2.0, 0.5)
        self.assertRaises(ValueError, gauss_2f1, 1.0, 1.0, 2.0, 1.0)
        self.assertRaises(ValueError, gauss_2f1, 1.0, 1.0, 2.0, -1.0)
        self.assertRaises(ValueError, HypergeoArgs(float('nan'), 1.0, 2.0, 0.5).check)


class TestIdentities(TestCase):
    def test_contiguous(self):
        for a, b, c, z in CASES[:3]:
            self.assertLess(contiguous_check(a, b, c, z), 1e-12)

    def test_quadratic(self):
        for a, b, c, z in [(0.3, 0.6, 1.7, 0.5), (2.2, 0.4, 0.45, 0.3), (1.5, 2.5, 0.75, -0.4)]:
            rhs = quadratic_identity_rhs(a, b, c, z)
            self.assertLessEqual(quadratic_identity_check(a, b, c, z), 1e-9 * max(1.0, abs(rhs)))

    def test_quadratic_random(self):
        rng = np.random.RandomState(21)
        for _ in range(50):
            a, b = rng.uniform(-0.9, 2.0, 2)
            c = rng.uniform(0.15, 0.85) + rng.randint(2)
            z = rng.uniform(-0.5, 0.5)
            scale = max(1.0,
                        abs((a - c + 1.0) * gauss_2f1(a, b, c, z)
                            * gauss_2f1(a - c + 2.0, b - c + 1.0, 2.0 - c, z)),
                        abs(a * gauss_2f1(a + 1.0, b, c, z)
                            * gauss_2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, z)))
            self.assertLessEqual(quadratic_identity_check(a, b, c, z), 1e-9 * scale,
                                 '(%r, %r, %r, %r)' % (a, b, c, z))

    def test_quadratic_domain(self):
        self.assertRaises(ValueError, quadratic_identity_check, 0.3, 0.6, 2.0, 0.5)

    def test_connection(self):
        for a, b, c, z in [(0.3, 0.45, 0.6, 0.35), (1.2, 0.7, 1.4, 0.6)]:
            self.assertLess(connection_check(a, b, c, z), 1e-12)
        self.assertRaises(ValueError, connection_check, 0.3, 0.45, 0.6, -0.2)


class TestGamma(TestCase):
    def test_gamma_ratio(self):
        assert_allclose(gamma_ratio(5.0, 3.0), 12.0, rtol=1e-14)
        assert_allclose(gamma_ratio(-0.5, 0.5), -2.0, rtol=1e-14)
        self.assertEqual(0.0, gamma_ratio(1.0, 0.0))
        self.assertEqual(0.0, gamma_ratio(1.5, -3.0))
        self.assertRaises(ValueError, gamma_ratio, 0.0, 1.0)

    def test_pochhammer(self):
        assert_allclose(pochhammer(0.5, 3), 1.875, rtol=1e-15)
        assert_allclose(log_pochhammer(0.5, 3), math.log(1.875), rtol=1e-14)
        self.assertRaises(ValueError, log_pochhammer, -0.5, 3)


class TestMoments(TestCase):
    def test_E_against_quadrature(self):
        for k in (0.0, 0.5, 0.8):
            for n in (0, 1, 4, 10):
                value, _ = quad(lambda t: t ** (2 * n) * math.sqrt((1 + t) / (1 - k * k * t * t)),
                                0.0, 1.0, weight='alg', wvar=(0.0, 0.5), epsabs=0.0, epsrel=1e-13)
                assert_allclose(moment_E(n, k), value, rtol=1e-10)

    def test_F_against_quadrature(self):
        for k in (0.0, 0.5, 0.8):
            for n in (0, 1, 4, 10):
                value, _ = quad(lambda t: t ** (2 * n) * math.sqrt((1 - k * k * t * t) / (1 + t)),
                                0.0, 1.0, weight='alg', wvar=(0.0, -0.5), epsabs=0.0, epsrel=1e-13)
                assert_allclose(moment_F(n, k), value, rtol=1e-10)

    def test_first_moments(self):
        assert_allclose(moment_E(0, 0.0), math.pi / 4, rtol=1e-15)
        assert_allclose(moment_F(0, 0.0), math.pi / 2, rtol=1e-15)

    def test_asymptotics(self):
        for k in (0.3, 0.7):
            n = 2000
            assert_allclose(moment_E(n, k) / moment_asymptotic(n, k, 'E'), 1.0, rtol=1e-2)
            assert_allclose(moment_F(n, k) / moment_asymptotic(n, k, 'F'), 1.0, rtol=1e-2)

    def test_invalid(self):
        self.assertRaises(ValueError, moment_E, -1, 0.5)
        self.assertRaises(ValueError, moment_F, -1, 0.5)
        self.assertRaises(ValueError, moment_asymptotic, 10, 0.5, 'G')
