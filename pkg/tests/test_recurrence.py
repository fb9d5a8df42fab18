from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose

from hankelab.recurrence import (RecurrenceParams, build_band_system, minimal_solution_oracle,
                                 omega, recurrence_residual, solution_basis, solution_plus,
                                 solution_plus_asymptotic, solution_plus_sequence, wronskian)
from hankelab.utils import ConvergenceError


PARAMS = RecurrenceParams(k=0.5, sigma=0.8, xi=0.3, eta=2.1)


class TestOmega(TestCase):
    def test_value(self):
        assert_allclose(omega(PARAMS), (-0.3 - 0.25 * 2.1 + 1.25 * 0.8) / 0.75, rtol=1e-15)
        self.assertEqual(omega(PARAMS), PARAMS.omega)

    def test_unit_omega(self):
        k = 0.4
        params = RecurrenceParams(k=k, sigma=1.0, xi=0.0, eta=2.0)
        assert_allclose(omega(params), 1.0, rtol=1e-15)


class TestSolutions(TestCase):
    def test_solution_plus_solves_recurrence(self):
        for params in (PARAMS, RecurrenceParams(0.8, 1.2, -0.5, 1.5), RecurrenceParams(0.3, 2.0, 1.0, 3.0)):
            h = solution_plus_sequence(params, 40)
            self.assertLess(np.max(recurrence_residual(params, h)), 1e-11)

    def test_scaled(self):
        for n in (0, 5, 30):
            assert_allclose(solution_plus(PARAMS, n), 0.5 ** n * solution_plus(PARAMS, n, scaled=True),
                            rtol=1e-15)

    def test_basis_solves_recurrence(self):
        pairs = np.array([solution_basis(PARAMS, n) for n in range(5, 30)])
        shifted = RecurrenceParams(PARAMS.k, PARAMS.sigma + 5, PARAMS.xi + 5, PARAMS.eta + 5)
        self.assertLess(np.max(recurrence_residual(shifted, pairs[:, 0])), 1e-9)
        self.assertLess(np.max(recurrence_residual(shifted, pairs[:, 1])), 1e-9)

    def test_wronskian(self):
        n = 10
        one_n, two_n = solution_basis(PARAMS, n)
        one_next, two_next = solution_basis(PARAMS, n + 1)
        assert_allclose(two_next * one_n - one_next * two_n, wronskian(PARAMS, n), rtol=1e-8)

    def test_wronskian_random(self):
        rng = np.random.RandomState(17)
        for _ in range(20):
            k = rng.uniform(0.35, 0.65)
            xi = rng.uniform(0.0, 1.0)
            eta = xi + rng.uniform(1.1, 1.9)
            params = RecurrenceParams(k=k, sigma=rng.uniform(0.5, 1.5), xi=xi, eta=eta)
            n = rng.randint(5, 15)
            one_n, two_n = solution_basis(params, n)
            one_next, two_next = solution_basis(params, n + 1)
            assert_allclose(two_next * one_n - one_next * two_n, wronskian(params, n), rtol=1e-9,
                            err_msg='%r n=%r' % (params, n))

    def test_closed_form_solutions(self):
        k = 0.5
        n = np.arange(30, dtype=float)
        cases = [
            (RecurrenceParams(k=k, sigma=1.0, xi=0.0, eta=2.0), k ** n / (n + 1)),
            (RecurrenceParams(k=k, sigma=2.0, xi=1.0, eta=3.0), k ** n / (n + 2)),
            (RecurrenceParams(k=k, sigma=(1 + 2 * k * k) / (1 + k * k), xi=0.0, eta=3.0),
             k ** n * (n + 2 - (n + 1) * k * k) / ((n + 1) * (n + 2))),
        ]
        for params, expected in cases:
            ratio = solution_plus_sequence(params, 30) / expected
            assert_allclose(ratio, ratio[0], rtol=1e-12, err_msg=repr(params))

    def test_basis_domain(self):
        self.assertRaises(ValueError, solution_basis, RecurrenceParams(0.5, 0.8, 0.0, 2.0), 3)

    def test_plus_domain(self):
        self.assertRaises(ValueError, solution_plus, RecurrenceParams(0.5, 0.8, -2.0, 1.0), 3)

    def test_asymptotics(self):
        k = 0.5
        params = RecurrenceParams(k=k, sigma=1.0 / (1 + k * k), xi=-0.5, eta=1.5)
        n = 300
        assert_allclose(solution_plus(params, n) / solution_plus_asymptotic(params, n), 1.0, rtol=2e-2)
        assert_allclose(solution_plus_asymptotic(params, n) / (k ** n * n ** -params.omega),
                        (1 - k * k) ** (1 - params.omega), rtol=1e-14)


class TestBandSystem(TestCase):
    def test_identities(self):
        system = build_band_system(PARAMS, 40, offset=3)
        self.assertEqual(40, system.size)
        self.assertLess(system.kernel_residual(), 1e-15)
        lg, gl = system.identity_defects()
        self.assertLess(lg, 1e-13)
        self.assertLess(gl, 1e-13)

    def test_perturbation_signs(self):
        system = build_band_system(PARAMS, 5, offset=2)
        k = PARAMS.k
        assert_allclose(system.R[0, 0], -(k + 1 / k) * PARAMS.sigma / 2)
        assert_allclose(system.R[1, 0], PARAMS.xi / 3)
        assert_allclose(system.R[0, 1], PARAMS.eta / 2)

    def test_tiny_system(self):
        self.assertEqual(0.0, build_band_system(PARAMS, 2).kernel_residual())


class TestMinimalSolutionOracle(TestCase):
    def test_matches_closed_form(self):
        for params in (PARAMS, RecurrenceParams(0.8, 1.2, -0.5, 1.5), RecurrenceParams(0.3, 2.0, 1.0, 3.0)):
            h = minimal_solution_oracle(params, 20)
            expected = solution_plus_sequence(params, 20)
            assert_allclose(h, expected / expected[0], rtol=1e-9)

    def test_unique_across_offsets(self):
        for params, offsets in ((PARAMS, (40, 80, 160)),
                                (RecurrenceParams(0.3, 2.0, 1.0, 3.0), (8, 16, 32))):
            reference = minimal_solution_oracle(params, 20, offset=offsets[0])
            for offset in offsets[1:]:
                assert_allclose(minimal_solution_oracle(params, 20, offset=offset), reference,
                                rtol=1e-8, err_msg='%r offset=%r' % (params, offset))

    def test_fixed_offset_too_small(self):
        params = RecurrenceParams(k=0.8, sigma=5.0, xi=5.0, eta=5.0)
        self.assertRaises(ConvergenceError, minimal_solution_oracle, params, 10, offset=1)

    def test_invalid_length(self):
        self.assertRaises(ValueError, minimal_solution_oracle, PARAMS, 0)
