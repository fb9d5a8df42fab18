"""Closed-form spectra of the eleven weighted Hankel operators and the
machinery that checks them against truncated matrices.

The eigenvalues are nu_m = h(lambda_m) where h is the tag's multiplier
function and lambda_m the spectral points of its polynomial family; the
eigenvectors are the orthonormal polynomials evaluated at lambda_m.
"""

import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import catalog
from .carlitz import FamilySpec, eigenvector, orthonormal_sequence, trusted_length
from .eigen import MAX_DENSE_SIZE, dense_symmetric_eigen, tridiagonal_eigen
from .elliptic import kernel_integral, make_context, sinc_kernel
from .operators import (build_hankel, build_jacobi, commutator_residual, resolve_tag,
                        tag_params, truncation_order, weight_sequence)
from .recurrence import solution_plus
from .utils import InstabilityError, richardson

_LOGGER = logging.getLogger(__name__)

EPS = np.finfo(float).eps
SERIES_START = 256
SERIES_LEVELS = 5
TRACE_TOL = 1e-17
TRACE_MAX_TERMS = 20000
EIGVEC_MARGIN = 1e4
JACOBI_SIZE = 300


def _operator(tag):
    return catalog.OPERATORS[tag]


def _lattice(tag):
    return catalog.FAMILIES[_operator(tag)['family']]['lattice']


def _check_index(tag, m):
    m_start = _operator(tag)['m_start']
    if m < m_start:
        raise IndexError('{} has no eigenvalue with index {} (first is {})'.format(tag, m, m_start))


def closed_eigenvalue(tag, ctx, m):
    tag = resolve_tag(tag)
    _check_index(tag, m)
    return ctx.nome_term(_operator(tag)['eigenvalue'], m, _lattice(tag))


def norm_sq(tag, ctx, m):
    """Squared l2-norm of the eigenvector normalised to entry 0 equal to 1."""
    tag = resolve_tag(tag)
    _check_index(tag, m)
    return ctx.nome_term(_operator(tag)['norm'], m, _lattice(tag))


def family_of(tag, ctx):
    return FamilySpec(_operator(resolve_tag(tag))['family'], ctx)


def closed_eigvec(tag, ctx, m, n):
    """Entry n of the m-th eigenvector by forward recurrence.

    Raises InstabilityError when entry n lies outside the range that the
    forward recurrence reproduces under a perturbation of the point.
    """
    tag = resolve_tag(tag)
    _check_index(tag, m)
    spec = family_of(tag, ctx)
    x = spec.spectral_point(m)
    trusted = trusted_length(spec, x, n + 1)
    if n >= trusted:
        raise InstabilityError('eigenvector {} entry {} at m = {} is beyond the trusted range of {}'.format(
            tag, n, m, trusted))
    return float(orthonormal_sequence(spec, x, n + 1)[n])


class ClosedFormSpectrum(namedtuple('ClosedFormSpectrum', 'tag ctx')):
    __slots__ = ()

    @property
    def m_start(self):
        return _operator(self.tag)['m_start']

    def eigenvalue(self, m):
        return closed_eigenvalue(self.tag, self.ctx, m)

    def eigvec_entry(self, m, n):
        return closed_eigvec(self.tag, self.ctx, m, n)

    def norm_sq(self, m):
        return norm_sq(self.tag, self.ctx, m)


def closed_spectrum(tag, k):
    return ClosedFormSpectrum(resolve_tag(tag), make_context(k))


def multiplier_function(tag, ctx, x):
    """The function h with nu_m = h(lambda_m), by quadrature over [0, K]."""
    tag = resolve_tag(tag)
    if x < 0.0:
        raise ValueError('multiplier needs x >= 0, got {!r}'.format(x))
    multiplier = _operator(tag)['multiplier']
    kind = multiplier['kind']
    C = multiplier['coef'] * math.pi ** multiplier['pi']
    if kind in ('cn', 'dn'):
        return C * kernel_integral('cos', kind, x, ctx)
    if kind == 'dn_boundary':
        boundary = ctx.kprime * float(sinc_kernel(x, ctx.K))
        return C / (ctx.k * ctx.k) * (kernel_integral('cos', 'dn', x, ctx) - boundary)
    if kind == 'sn_cubic':
        return C * kernel_integral('sinc', 'sn_cubic', x, ctx)
    if kind == 'sn2_boundary':
        return C * (float(sinc_kernel(x, ctx.K)) - kernel_integral('cos', 'sn2', x, ctx))
    if kind == 'sn':
        return C * kernel_integral('sinc', 'sn', x, ctx)
    if kind == 'sn_boundary':
        return C * (math.cos(math.sqrt(x) * ctx.K) + x * kernel_integral('sinc', 'sn', x, ctx))
    raise ValueError('unknown multiplier kind {!r}'.format(kind))


def multiplier_series(tag, ctx, x, terms=SERIES_START, extrapolate=False):
    """sum_n H[n, 0] P_n(x), the series form of the multiplier.

    Away from the spectral points the terms decay like n^-2; with
    ``extrapolate`` the partial sums at 256 .. 4096 terms are Richardson
    extrapolated.
    """
    tag = resolve_tag(tag)
    count = SERIES_START * 2 ** (SERIES_LEVELS - 1) if extrapolate else terms
    a, b, c = _operator(tag)['weight']
    params = tag_params(tag, ctx.k)
    spec = family_of(tag, ctx)
    weights = weight_sequence(a, b, c, np.arange(count))
    moments = np.array([solution_plus(params, n, scaled=True) for n in range(count)])
    # w_0 = 1, and the k^n of the moments cancels against the scaled polynomials
    summands = weights * moments * orthonormal_sequence(spec, x, count, scale=ctx.k)
    if not extrapolate:
        return float(np.sum(summands))
    partial = np.cumsum(summands)
    cuts = [SERIES_START * 2 ** j for j in range(SERIES_LEVELS)]
    estimate, error = richardson([partial[cut - 1] for cut in cuts])
    _LOGGER.debug('multiplier series %s at x=%r: %r (extrapolation error %.2g)', tag, x, estimate, error)
    return estimate


def trace_identity(tag, k):
    """(sum of the diagonal of H, sum of the closed-form eigenvalues).

    Both sums run until their terms drop below 1e-17 of the running total.
    """
    tag = resolve_tag(tag)
    ctx = make_context(k)
    a, b, c = _operator(tag)['weight']
    params = tag_params(tag, ctx.k)

    trace = 0.0
    for n in range(TRACE_MAX_TERMS):
        term = weight_sequence(a, b, c, n) ** 2 * solution_plus(params, 2 * n)
        trace += term
        if abs(term) <= TRACE_TOL * abs(trace):
            break

    eigen_sum = 0.0
    for m in range(_operator(tag)['m_start'], TRACE_MAX_TERMS):
        term = closed_eigenvalue(tag, ctx, m)
        eigen_sum += term
        if term <= TRACE_TOL * eigen_sum:
            break
    _LOGGER.debug('trace of %s at k=%r: %r against eigenvalue sum %r', tag, k, trace, eigen_sum)
    return trace, eigen_sum


VerifyConfig = namedtuple('VerifyConfig', 'n m_max eigvec_m_max tol eigvec_tol norm_tol '
                                          'commutator_tol trace_tol jobs doubling_tol '
                                          'jacobi_n jacobi_want jacobi_tol')
VerifyConfig.__new__.__defaults__ = (None, 8, 5, 1e-8, 1e-6, 1e-6, 1e-8, 1e-9, 1, 1e-10,
                                     JACOBI_SIZE, 5, 1e-6)


EigenRecord = namedtuple('EigenRecord', 'm closed_form numeric rel_err floor doubling_gap '
                                        'eigvec_trusted eigvec_residual norm_gap passed')


JacobiCheck = namedtuple('JacobiCheck', 'size points closed numeric doubled rel_err doubling_gap')


class SpectralReport(namedtuple('SpectralReport', 'tag k N m_start records commutator_residual '
                                                  'trace_gap doubling_gap jacobi failures passed')):
    __slots__ = ()

    def to_dict(self):
        jacobi = self.jacobi
        return {
            'tag': self.tag,
            'k': self.k,
            'truncation': self.N,
            'm_start': self.m_start,
            'eigenvalues': [
                {
                    'm': record.m,
                    'closed_form': record.closed_form,
                    'numeric': record.numeric,
                    'rel_err': record.rel_err,
                    'floor': record.floor,
                    'doubling_gap': record.doubling_gap,
                    'eigvec_trusted': record.eigvec_trusted,
                    'eigvec_residual': record.eigvec_residual,
                    'norm_gap': record.norm_gap,
                    'pass': record.passed,
                }
                for record in self.records
            ],
            'commutator_residual': self.commutator_residual,
            'trace_gap': self.trace_gap,
            'doubling_gap': self.doubling_gap,
            'jacobi': None if jacobi is None else {
                'truncation': jacobi.size,
                'points': list(jacobi.points),
                'closed_form': list(jacobi.closed),
                'numeric': list(jacobi.numeric),
                'rel_err': jacobi.rel_err,
                'doubling_gap': jacobi.doubling_gap,
            },
            'failures': list(self.failures),
            'pass': self.passed,
        }


def eigvec_trusted(nu, nu_top, N, tol):
    """Whether a residual below ``tol`` can be resolved for eigenvalue nu.

    Rounding in H psi is of order N eps nu_top |psi| whatever nu is, so
    relative to nu psi it is amplified by nu_top/nu.
    """
    return bool(EIGVEC_MARGIN * N * EPS * abs(nu_top) <= tol * nu)


def _eigvec_residual(matrix, psi, nu):
    """Relative residual of H psi = nu psi and its rounding floor."""
    scale = nu * np.linalg.norm(psi)
    residual = np.linalg.norm(matrix @ psi - nu * psi) / scale
    floor = matrix.shape[0] * EPS * np.linalg.norm(np.abs(matrix) @ np.abs(psi)) / scale
    return float(residual), float(floor)


def doubled_spectrum(tag, k, N, want):
    """Top ``want`` eigenvalues of the order 2N truncation, or None when
    2N exceeds the dense solver's limit."""
    if 2 * N > MAX_DENSE_SIZE:
        _LOGGER.info('%s at k=%r: no doubling check, 2N = %d exceeds %d', tag, k, 2 * N, MAX_DENSE_SIZE)
        return None
    values, _ = dense_symmetric_eigen(build_hankel(tag, k, 2 * N).matrix(), want=want, vectors=False)
    return values


def _records(tag, ctx, matrix, config, failures, doubled=None):
    spec = family_of(tag, ctx)
    m_start = _operator(tag)['m_start']
    N = matrix.shape[0]
    values, _ = dense_symmetric_eigen(matrix, want=config.m_max + 1, vectors=False)
    floor = N * EPS * abs(values[0])
    if doubled is not None:
        doubled_floor = 2 * N * EPS * abs(doubled[0])
    records = []
    for i, numeric in enumerate(values):
        m = m_start + i
        closed = closed_eigenvalue(tag, ctx, m)
        gap = abs(closed - numeric)
        rel_err = gap / closed
        passed = bool(rel_err <= config.tol or gap <= floor)
        if not passed:
            failures.append('eigenvalue m={}: rel_err {:.3g}'.format(m, rel_err))

        doubling_gap = None
        if doubled is not None:
            moved = abs(numeric - doubled[i])
            doubling_gap = float(moved / abs(doubled[i]))
            if doubling_gap > config.doubling_tol and moved > doubled_floor:
                passed = False
                failures.append('doubling m={}: gap {:.3g}'.format(m, doubling_gap))

        trusted = residual = norm_gap = None
        if i <= config.eigvec_m_max:
            psi = eigenvector(spec, spec.spectral_point(m), N)
            trusted = eigvec_trusted(closed, values[0], N, config.eigvec_tol)
            if trusted:
                residual, residual_floor = _eigvec_residual(matrix, psi, closed)
                if residual > max(config.eigvec_tol, 8.0 * residual_floor):
                    passed = False
                    failures.append('eigenvector m={}: residual {:.3g}'.format(m, residual))
            else:
                _LOGGER.debug('%s m=%d: eigenvector residual below rounding, not checked', tag, m)
            expected = norm_sq(tag, ctx, m)
            norm_gap = abs(float(psi @ psi) - expected) / expected
            if norm_gap > config.norm_tol:
                passed = False
                failures.append('norm m={}: gap {:.3g}'.format(m, norm_gap))
        records.append(EigenRecord(m=m, closed_form=closed, numeric=float(numeric), rel_err=rel_err,
                                   floor=floor, doubling_gap=doubling_gap, eigvec_trusted=trusted,
                                   eigvec_residual=residual, norm_gap=norm_gap, passed=passed))
    return records


def jacobi_points(tag, k, size=JACOBI_SIZE, want=5):
    """Smallest eigenvalues of the Jacobi truncation of order ``size`` and
    of order 2 size, next to the closed-form spectral points.

    Relative gaps are taken against max(1, |lambda|) so that the point
    lambda_0 = 0 of the even lattice is compared absolutely.
    """
    tag = resolve_tag(tag)
    spec = family_of(tag, make_context(k))
    first = spec.entry['first_eigen']
    points = list(range(first, first + want))
    closed = [spec.spectral_point(m) for m in points]
    numeric = tridiagonal_eigen(build_jacobi(tag, spec.k, size), want)
    doubled = tridiagonal_eigen(build_jacobi(tag, spec.k, 2 * size), want)
    rel_err = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(numeric, closed))
    doubling_gap = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(numeric, doubled))
    _LOGGER.debug('%s Jacobi points at k=%r, N=%d: rel_err %.3g, doubling %.3g',
                  tag, k, size, rel_err, doubling_gap)
    return JacobiCheck(size=size, points=points, closed=closed, numeric=[float(x) for x in numeric],
                       doubled=[float(x) for x in doubled], rel_err=float(rel_err),
                       doubling_gap=float(doubling_gap))


def verify(tag, k, config=VerifyConfig(), hankel=None):
    """Run every check for one tag and modulus and collect the results.

    Failures of individual checks, including exceptions raised while
    computing them, are recorded in the report rather than raised. A
    prebuilt ``hankel`` operator may be passed to check a modified matrix;
    the checks that rebuild the operator (doubling, trace) are then
    skipped.
    """
    tag = resolve_tag(tag)
    ctx = make_context(k)
    m_start = _operator(tag)['m_start']
    failures = []
    records = []
    commutator = trace_gap = doubling_gap = jacobi = None
    N = hankel.N if hankel is not None else (config.n or truncation_order(ctx.k))

    def report():
        return SpectralReport(tag=tag, k=ctx.k, N=N, m_start=m_start, records=records,
                              commutator_residual=commutator, trace_gap=trace_gap,
                              doubling_gap=doubling_gap, jacobi=jacobi, failures=failures,
                              passed=not failures)

    try:
        H = hankel if hankel is not None else build_hankel(tag, ctx.k, N)
        matrix = H.matrix()
    except (ValueError, ArithmeticError, RuntimeError) as e:
        failures.append('build: {}'.format(e))
        _LOGGER.warning('%s at k=%r: %s', tag, k, failures[-1])
        return report()

    try:
        commutator = commutator_residual(H, build_jacobi(tag, ctx.k, N))
        if commutator > config.commutator_tol:
            failures.append('commutator: residual {:.3g}'.format(commutator))
    except (ValueError, ArithmeticError, RuntimeError) as e:
        failures.append('commutator: {}'.format(e))

    doubled = None
    if hankel is None and config.doubling_tol is not None:
        try:
            doubled = doubled_spectrum(tag, ctx.k, N, config.m_max + 1)
        except (ValueError, ArithmeticError, RuntimeError) as e:
            failures.append('doubling: {}'.format(e))

    try:
        records = _records(tag, ctx, matrix, config, failures, doubled)
        gaps = [record.doubling_gap for record in records if record.doubling_gap is not None]
        doubling_gap = max(gaps) if gaps else None
    except (ValueError, IndexError, ArithmeticError, RuntimeError) as e:
        failures.append('spectrum: {}'.format(e))

    # the trace identity concerns the untruncated operator of the tag
    if hankel is None:
        try:
            trace, eigen_sum = trace_identity(tag, ctx.k)
            trace_gap = abs(trace - eigen_sum)
            if trace_gap > config.trace_tol:
                failures.append('trace: gap {:.3g}'.format(trace_gap))
        except (ValueError, ArithmeticError, RuntimeError) as e:
            failures.append('trace: {}'.format(e))

    if config.jacobi_n is not None:
        try:
            jacobi = jacobi_points(tag, ctx.k, config.jacobi_n, config.jacobi_want)
            if jacobi.rel_err > config.jacobi_tol:
                failures.append('jacobi points: rel_err {:.3g}'.format(jacobi.rel_err))
            if jacobi.doubling_gap > config.jacobi_tol:
                failures.append('jacobi doubling: gap {:.3g}'.format(jacobi.doubling_gap))
        except (ValueError, ArithmeticError, RuntimeError) as e:
            failures.append('jacobi points: {}'.format(e))

    for failure in failures:
        _LOGGER.warning('%s at k=%r failed %s', tag, ctx.k, failure)
    _LOGGER.info('%s at k=%r, N=%d: %s', tag, ctx.k, N, 'pass' if not failures else 'FAIL')
    return report()


def verify_many(tags, k_values, config=VerifyConfig()):
    """verify() over every (tag, k) pair, in tag order then k order.

    With ``config.jobs`` above one the pairs run on a thread pool; the
    order of the result does not depend on completion order.
    """
    pairs = [(tag, k) for tag in tags for k in k_values]
    if config.jobs <= 1:
        return [verify(tag, k, config) for tag, k in pairs]
    with ThreadPoolExecutor(max_workers=config.jobs) as executor:
        return list(executor.map(lambda pair: verify(pair[0], pair[1], config), pairs))
