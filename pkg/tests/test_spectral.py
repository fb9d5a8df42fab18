import math
from unittest import TestCase

import numpy as np
from numpy.testing import assert_allclose

from hankelab import catalog
from hankelab.carlitz import eigenvector, orthogonality_mass
from hankelab.elliptic import make_context
from hankelab.eigen import dense_symmetric_eigen
from hankelab.operators import build_hankel
from hankelab.spectral import (VerifyConfig, closed_eigenvalue, closed_eigvec, closed_spectrum,
                               doubled_spectrum, eigvec_trusted, family_of, jacobi_points,
                               multiplier_function, multiplier_series, norm_sq,
                               trace_identity, verify, verify_many)
from hankelab.utils import InstabilityError

TAGS = list(catalog.OPERATORS)

class TestClosedForms(TestCase):
    def setUp(self):
        self.ctx = make_context(0.5)

    def test_eigenvalue_ratios(self):
        for m in range(1, 6):
            assert_allclose(closed_eigenvalue('p', self.ctx, m) / closed_eigenvalue('q', self.ctx, m),
                            2.0, rtol=1e-14)
            assert_allclose(closed_eigenvalue('s', self.ctx, m) / closed_eigenvalue('r', self.ctx, m),
                            2.0 / 0.25, rtol=1e-14)

    def test_missing_indices(self):
        self.assertRaises(IndexError, closed_eigenvalue, 's', self.ctx, 0)
        self.assertRaises(IndexError, norm_sq, 'g', self.ctx, 0)
        self.assertRaises(IndexError, closed_eigvec, "g'", self.ctx, 0, 0)

    def test_decreasing_positive(self):
        for tag in TAGS:
            spectrum = closed_spectrum(tag, 0.6)
            values = [spectrum.eigenvalue(m) for m in range(spectrum.m_start, spectrum.m_start + 10)]
            self.assertTrue(all(v > 0.0 for v in values), tag)
            self.assertTrue(all(b < a for a, b in zip(values, values[1:])), tag)

    def test_eigenvalue_times_norm(self):
        for tag, start in (('p', 0), ('r', 1)):
            products = [closed_eigenvalue(tag, self.ctx, m) * norm_sq(tag, self.ctx, m)
                        for m in range(start, 8)]
            assert_allclose(products, products[0], rtol=1e-13, err_msg=tag)

    def test_constant_eigenvector_norm(self):
        assert_allclose(norm_sq('r', self.ctx, 0), 2.0 * self.ctx.K / math.pi, rtol=1e-14)
        assert_allclose(closed_eigenvalue('r', self.ctx, 0), math.sqrt(math.pi), rtol=1e-14)

    def test_norm_inverts_mass(self):
        for k in (0.3, 0.7):
            ctx = make_context(k)
            for tag in TAGS:
                spec = family_of(tag, ctx)
                m_start = catalog.OPERATORS[tag]['m_start']
                for m in range(m_start, m_start + 4):
                    assert_allclose(norm_sq(tag, ctx, m) * orthogonality_mass(spec, m), 1.0,
                                    rtol=1e-12, err_msg='%s k=%r m=%r' % (tag, k, m))

    def test_partial_norms(self):
        for tag in ('p', 'q', 'f', "g'"):
            spec = family_of(tag, self.ctx)
            m_start = catalog.OPERATORS[tag]['m_start']
            for m in range(m_start, m_start + 4):
                psi = eigenvector(spec, spec.spectral_point(m), 200)
                assert_allclose(psi @ psi, norm_sq(tag, self.ctx, m), rtol=1e-6,
                                err_msg='%s m=%r' % (tag, m))

    def test_eigvec_entries(self):
        self.assertEqual(1.0, closed_eigvec('p', self.ctx, 2, 0))
        self.assertRaises(InstabilityError, closed_eigvec, 'p', self.ctx, 2, 300)
        spectrum = closed_spectrum('p', 0.5)
        self.assertEqual(closed_eigvec('p', self.ctx, 1, 1), spectrum.eigvec_entry(1, 1))

class TestMultiplier(TestCase):
    def test_reproduces_eigenvalues(self):
        ctx = make_context(0.5)
        for tag in TAGS:
            spec = family_of(tag, ctx)
            m_start = catalog.OPERATORS[tag]['m_start']
            top = closed_eigenvalue(tag, ctx, m_start)
            for m in range(m_start, m_start + 4):
                nu = closed_eigenvalue(tag, ctx, m)
                value = multiplier_function(tag, ctx, spec.spectral_point(m))
                self.assertLess(abs(value - nu), max(1e-8 * nu, 1e-13 * top),
                                '%s m=%r' % (tag, m))

    def test_series_matches_integral(self):
        ctx = make_context(0.5)
        for tag in ('r', 'p'):
            integral = multiplier_function(tag, ctx, 3.7)
            series = multiplier_series(tag, ctx, 3.7, extrapolate=True)
            self.assertLess(abs(series - integral), 1e-7 * max(1.0, abs(integral)), tag)

    def test_negative_point(self):
        self.assertRaises(ValueError, multiplier_function, 'p', make_context(0.5), -1.0)

class TestTraceIdentity(TestCase):
    def test_all_tags(self):
        for tag in TAGS:
            trace, eigen_sum = trace_identity(tag, 0.5)
            self.assertLess(abs(trace - eigen_sum), 1e-9 * max(1.0, eigen_sum), tag)

class TestVerify(TestCase):
    def test_passes(self):
        report = verify('f', 0.5)
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(64, report.N)
        self.assertEqual(9, len(report.records))
        self.assertIsNotNone(report.records[0].eigvec_residual)
        self.assertIsNone(report.records[-1].eigvec_residual)
        self.assertLess(report.commutator_residual, 1e-8)
        self.assertLess(report.trace_gap, 1e-9)

    def test_first_index(self):
        report = verify('s', 0.3, VerifyConfig(m_max=3))
        self.assertEqual(1, report.m_start)
        self.assertEqual([1, 2, 3, 4], [record.m for record in report.records])
        self.assertTrue(report.passed, report.failures)

    def test_report_dict(self):
        data = verify('p', 0.5, VerifyConfig(m_max=2, eigvec_m_max=0)).to_dict()
        self.assertEqual({'tag', 'k', 'truncation', 'm_start', 'eigenvalues', 'commutator_residual',
                          'trace_gap', 'doubling_gap', 'jacobi', 'failures', 'pass'}, set(data))
        self.assertEqual(3, len(data['eigenvalues']))
        self.assertIs(True, data['eigenvalues'][0]['pass'])

    def test_corrupted_operator_fails(self):
        H = build_hankel('f', 0.5, 64)
        w = H.w.copy()
        w[3] *= 1.01
        report = verify('f', 0.5, hankel=H._replace(w=w))
        self.assertFalse(report.passed)
        self.assertTrue(any(failure.startswith('commutator') for failure in report.failures))
        self.assertIsNone(report.trace_gap)

    def test_many_keeps_order(self):
        config = VerifyConfig(n=24, m_max=1, eigvec_m_max=-1, jobs=2)
        reports = verify_many(['p', "f'"], [0.3, 0.5], config)
        self.assertEqual([('p', 0.3), ('p', 0.5), ("f'", 0.3), ("f'", 0.5)],
                         [(report.tag, report.k) for report in reports])

    def test_all_tags_pass(self):
        for k in (0.3, 0.5):
            for tag in TAGS:
                report = verify(tag, k)
                self.assertTrue(report.passed, '%s k=%r: %s' % (tag, k, report.failures))
        report = verify('r', 0.8, VerifyConfig(jacobi_n=None))
        self.assertTrue(report.passed, report.failures)
        self.assertEqual(186, report.N)

    def test_constant_eigenvector(self):
        report = verify('r', 0.5, VerifyConfig(m_max=2, eigvec_m_max=1))
        self.assertTrue(report.passed, report.failures)
        self.assertLess(report.records[0].norm_gap, 1e-6)
        self.assertLess(report.records[0].eigvec_residual, 1e-6)

    def test_small_eigenvalues_skip_residual(self):
        report = verify('p', 0.3, VerifyConfig(jacobi_n=None))
        self.assertTrue(report.passed, report.failures)
        trusted = [record.eigvec_trusted for record in report.records]
        self.assertIs(True, trusted[0])
        self.assertIs(False, trusted[5])
        self.assertIsNone(trusted[6])
        for record in report.records[:6]:
            self.assertIsNotNone(record.norm_gap)
            if not record.eigvec_trusted:
                self.assertIsNone(record.eigvec_residual)


class TestEigvecTrust(TestCase):
    def test_threshold(self):
        self.assertTrue(eigvec_trusted(1.0, 1.0, 64, 1e-6))
        self.assertTrue(eigvec_trusted(1e-3, 1.0, 64, 1e-6))
        self.assertFalse(eigvec_trusted(1e-5, 1.0, 64, 1e-6))
        self.assertFalse(eigvec_trusted(1e-3, 1.0, 64, 1e-9))

    def test_returns_plain_bool(self):
        self.assertIs(True, eigvec_trusted(np.float64(0.5), np.float64(1.0), 64, 1e-6))


class TestDoubling(TestCase):
    def test_spectrum_settles(self):
        N = 64
        values, _ = dense_symmetric_eigen(build_hankel('q', 0.5, N).matrix(), want=4, vectors=False)
        doubled = doubled_spectrum('q', 0.5, N, 4)
        self.assertEqual(4, len(doubled))
        assert_allclose(values[:2], doubled[:2], rtol=1e-10)
        assert_allclose(values, doubled, rtol=0, atol=2 * N * np.finfo(float).eps * doubled[0])

    def test_beyond_dense_limit(self):
        self.assertIsNone(doubled_spectrum('p', 0.5, 300, 3))

    def test_short_truncation_fails(self):
        report = verify('p', 0.8, VerifyConfig(n=12, m_max=2, eigvec_m_max=-1, jacobi_n=None))
        self.assertFalse(report.passed)
        self.assertTrue(any(failure.startswith('doubling') for failure in report.failures),
                        report.failures)
        self.assertGreater(report.doubling_gap, 1e-10)

    def test_disabled(self):
        report = verify('p', 0.5, VerifyConfig(m_max=1, eigvec_m_max=-1, doubling_tol=None,
                                               jacobi_n=None))
        self.assertIsNone(report.doubling_gap)
        self.assertIsNone(report.records[0].doubling_gap)
        self.assertIsNone(report.jacobi)


class TestJacobiPoints(TestCase):
    def test_all_tags(self):
        for tag in ('f', 'g', 'p', 'q', 'r', 's'):
            check = jacobi_points(tag, 0.5)
            self.assertEqual(300, check.size)
            self.assertEqual(5, len(check.numeric))
            self.assertLess(check.rel_err, 1e-6, tag)
            self.assertLess(check.doubling_gap, 1e-6, tag)

    def test_first_points(self):
        self.assertEqual([1, 2, 3, 4, 5], jacobi_points('s', 0.8).points)
        self.assertEqual([1, 2, 3], jacobi_points('g', 0.8, want=3).points)
        check = jacobi_points('r', 0.8, want=2)
        self.assertEqual([0, 1], check.points)
        self.assertLess(abs(check.numeric[0]), 1e-6)

    def test_reported(self):
        report = verify('q', 0.5, VerifyConfig(m_max=1, jacobi_want=3))
        self.assertEqual(3, len(report.jacobi.points))
        self.assertEqual(report.jacobi.rel_err, report.to_dict()['jacobi']['rel_err'])
