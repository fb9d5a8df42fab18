"""The six Stieltjes-Carlitz polynomial families F1 .. F6.

Every family is generated by a Jacobi matrix of the same shape (see
``catalog.yaml``); the polynomials are orthogonal with respect to a
discrete measure sitting on the points pi^2 (2m+1)^2 / (4K^2) or
pi^2 m^2 / K^2.

Three evaluations are offered:

* ``monic_eval``: the native monic polynomial of the family, as printed
  in its recurrence. It overflows quickly since the coefficients grow like
  factorials squared.
* ``orthonormal_eval`` / ``orthonormal_sequence``: the orthonormal
  polynomials of the Jacobi matrix, computed without ever forming the
  factorial normalization.
* ``eigenvector``: the same sequence at a spectral point by backward
  recurrence, which stays accurate where forward evaluation loses the
  decaying solution.

F1 and F2 are reflected: their native polynomials are orthogonal in the
variable -x, so ``f_n(-x) = norm(n) P_n(x)``. For F3 .. F6 the native
polynomial is ``(-1)^n norm(n) P_n(x)``.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.special import gammaln

from . import catalog
from .elliptic import jacobi_elliptic, kernel_integral, make_context, sinc_kernel
from .hypergeo import moment_E, moment_F
from .utils import ConvergenceError, InstabilityError, richardson

_LOGGER = logging.getLogger(__name__)

PERTURBATION = 1e-9
DIVERGENCE_TOL = 1e-6
MILLER_DIGITS = 20
MILLER_RESCALE = 1e200
MASS_TAIL_TOL = 1e-12
SUMMAND_TOL = 1e-18
MAX_POINTS = 2000
DUAL_START = 64
DUAL_MAX = 4096
DUAL_TOL = 1e-10
EXTRAPOLATION_START = 256
EXTRAPOLATION_LEVELS = 5

_LETTERS = {family['letter']: family_id for family_id, family in catalog.FAMILIES.items()}


def resolve_family(family_id):
    """Accept 'F1' .. 'F6' or the letters f, g, p, q, r, s."""
    if family_id in catalog.FAMILIES:
        return family_id
    try:
        return _LETTERS[family_id]
    except KeyError:
        raise ValueError('unknown polynomial family {!r}, expected one of {}'.format(
            family_id, ', '.join(list(catalog.FAMILIES) + sorted(_LETTERS))))


class FamilySpec(namedtuple('FamilySpec', 'family_id ctx')):
    """One polynomial family at a fixed modulus.

    Build it with :func:`family_spec`. The coefficient methods accept
    scalars as well as numpy arrays of indices.
    """
    __slots__ = ()

    @property
    def entry(self):
        return catalog.FAMILIES[self.family_id]

    @property
    def k(self):
        return self.ctx.k

    @property
    def reflected(self):
        return self.entry['reflected']

    @property
    def lattice(self):
        return self.entry['lattice']

    @property
    def first_point(self):
        return self.entry['first_point']

    @property
    def sigma(self):
        s0, s2 = self.entry['sigma']
        k2 = self.k * self.k
        return (s0 + s2 * k2) / (1.0 + k2)

    def beta_coef(self, n):
        """Diagonal entry beta_n of the Jacobi matrix."""
        d0, d2 = self.entry['shift']
        k2 = self.k * self.k
        return 4.0 * (1.0 + k2) * n * (n + self.sigma) + d0 + d2 * k2

    def alpha_sq_coef(self, n):
        """alpha_(n-1)^2, the coefficient of P_(n-1) in the monic recurrence."""
        a, b, c = self.entry['jacobi']
        return 16.0 * self.k ** 2 * n * (n + a) * (n + b) * (n + c)

    def alpha_coef(self, n):
        """Off-diagonal entry alpha_n, negative for every n >= 0."""
        return -np.sqrt(self.alpha_sq_coef(np.add(n, 1.0)))

    def log_norm(self, n):
        a, b, c = self.entry['jacobi']
        n = np.asarray(n, dtype=float)
        value = (n * math.log(4.0 * self.k)
                 + 0.5 * (gammaln(n + 1.0)
                          + gammaln(n + a + 1.0) - gammaln(a + 1.0)
                          + gammaln(n + b + 1.0) - gammaln(b + 1.0)
                          + gammaln(n + c + 1.0) - gammaln(c + 1.0)))
        if value.ndim == 0:
            return float(value)
        return value

    def norm(self, n):
        """prod_(j<n) |alpha_j|, the divisor turning monic into orthonormal."""
        return np.exp(self.log_norm(n))

    def jacobi_entries(self, size):
        """(alpha, beta) of the size x size truncation."""
        n = np.arange(size, dtype=float)
        return self.alpha_coef(n[:-1]), self.beta_coef(n)

    def spectral_point(self, m):
        if self.lattice == 'odd':
            return (math.pi * (2 * m + 1) / (2.0 * self.ctx.K)) ** 2
        return (math.pi * m / self.ctx.K) ** 2

    def weight(self, x):
        kind = self.entry['weight']
        if kind == '1':
            return 1.0
        if kind == 'x':
            return x
        return x / (self.k * self.k)


def family_spec(family_id, k):
    return FamilySpec(resolve_family(family_id), make_context(k))


def monic_eval(spec, n, x):
    """Native monic polynomial of degree ``n`` at ``x``."""
    if n < 0:
        raise ValueError('degree must be non-negative, got {!r}'.format(n))
    direction = -1.0 if spec.reflected else 1.0
    previous, current = 0.0, 1.0
    for j in range(n):
        previous, current = current, ((x - direction * spec.beta_coef(j)) * current
                                      - spec.alpha_sq_coef(j) * previous)
        if not math.isfinite(current):
            raise OverflowError(
                'monic {} polynomial overflows at degree {} (x = {!r}); '
                'use orthonormal_eval'.format(spec.family_id, j + 1, x))
    return current


def orthonormal_sequence(spec, x, count, scale=1.0):
    """s^n P_n(x) for n = 0 .. count-1, with s = ``scale``.

    P_n are the orthonormal polynomials of the Jacobi matrix. Unscaled
    values grow like k^-n; ``scale=spec.k`` keeps them bounded.
    """
    if count < 1:
        raise ValueError('count must be positive, got {!r}'.format(count))
    alpha = [float(v) for v in spec.alpha_coef(np.arange(count, dtype=float))]
    beta = [float(v) for v in spec.beta_coef(np.arange(count, dtype=float))]
    values = [1.0]
    previous, current = 0.0, 1.0
    for n in range(count - 1):
        back = alpha[n - 1] if n else 0.0
        previous, current = current, (scale * (x - beta[n]) * current
                                      - scale * scale * back * previous) / alpha[n]
        values.append(current)
    return np.array(values)


def orthonormal_eval(spec, n, x, scale=1.0):
    if n < 0:
        raise ValueError('degree must be non-negative, got {!r}'.format(n))
    return float(orthonormal_sequence(spec, x, n + 1, scale)[n])


def trusted_length(spec, x, count):
    """Number of leading forward-recurrence entries that survive a
    perturbation of x by 1e-9 relative.

    Entry j is trusted while the two runs differ by at most 1e-6 of the
    largest entry seen so far.
    """
    delta = PERTURBATION * max(abs(x), 1.0)
    base = orthonormal_sequence(spec, x, count)
    trusted = count
    for shifted in (x - delta, x + delta):
        other = orthonormal_sequence(spec, shifted, count)
        running = 0.0
        for j in range(count):
            if not (math.isfinite(base[j]) and math.isfinite(other[j])):
                trusted = min(trusted, j)
                break
            running = max(running, abs(base[j]))
            if abs(base[j] - other[j]) > DIVERGENCE_TOL * running:
                trusted = min(trusted, j)
                break
    _LOGGER.debug('%s at x=%r: %d of %d forward entries trusted',
                  spec.family_id, x, trusted, count)
    return trusted


def miller_padding(k):
    """Extra backward steps needed to lose the start-up error."""
    return int(math.ceil(MILLER_DIGITS * math.log(10.0) / (2.0 * abs(math.log(k))))) + 8


def eigenvector(spec, x, size):
    """The minimal solution of the three-term recurrence at ``x``,
    normalised to entry 0 equal to 1.

    At a spectral point this is (P_0(x), ..., P_(size-1)(x)).
    """
    if size < 1:
        raise ValueError('size must be positive, got {!r}'.format(size))
    top = size + miller_padding(spec.k)
    n = np.arange(top + 1, dtype=float)
    alpha = [float(v) for v in spec.alpha_coef(n)]
    beta = [float(v) for v in spec.beta_coef(n)]

    values = np.zeros(top + 2)
    values[top] = 1.0
    for j in range(top, 0, -1):
        values[j - 1] = ((x - beta[j]) * values[j] - alpha[j] * values[j + 1]) / alpha[j - 1]
        if abs(values[j - 1]) > MILLER_RESCALE:
            values[j - 1:] /= MILLER_RESCALE
    if values[0] == 0.0:
        raise InstabilityError('backward recurrence for {} vanishes at entry 0 (x = {!r})'.format(
            spec.family_id, x))
    _LOGGER.debug('%s eigenvector at x=%r: %d entries, %d padding steps',
                  spec.family_id, x, size, top - size)
    return values[:size] / values[0]


def spectral_points(spec, m):
    """(lambda_m, mass of the Dirac delta at lambda_m) of the family's measure."""
    if m < spec.first_point:
        raise IndexError('{} has no spectral point with index {} (first is {})'.format(
            spec.family_id, m, spec.first_point))
    mass = spec.ctx.nome_term(spec.entry['mass'], m, spec.lattice)
    return spec.spectral_point(m), mass


def orthogonality_mass(spec, m):
    """Mass at lambda_m of the measure the orthonormal polynomials are
    orthonormal for, the extra factor x or x/k^2 included."""
    point, mass = spectral_points(spec, m)
    return mass * spec.weight(point)


def mass_tail_count(ctx, tol=MASS_TAIL_TOL):
    """Smallest M with q^M/(1 - q) below ``tol``."""
    return max(1, int(math.ceil(math.log(tol * (1.0 - ctx.q)) / math.log(ctx.q))))


def orthonormality_matrix(spec, size):
    """sum_l w_l P_m(lambda_l) P_n(lambda_l) for 0 <= m, n < size.

    The sum runs at least over the mass-tail count and continues until the
    summand has passed its peak and dropped below 1e-18.
    """
    start = mass_tail_count(spec.ctx)
    total = np.zeros((size, size))
    peak = 0.0
    for count, m in enumerate(range(spec.first_point, spec.first_point + MAX_POINTS)):
        weight = orthogonality_mass(spec, m)
        values = orthonormal_sequence(spec, spec.spectral_point(m), size)
        term = weight * np.outer(values, values)
        size_of_term = float(np.max(np.abs(term)))
        total += term
        if size_of_term >= peak:
            peak = size_of_term
        elif count >= start and size_of_term < SUMMAND_TOL:
            _LOGGER.debug('%s orthonormality: %d points', spec.family_id, count + 1)
            return total
    raise ConvergenceError('{} orthonormality sum did not settle in {} points'.format(
        spec.family_id, MAX_POINTS), MAX_POINTS)


def dual_orthogonality(spec, indices):
    """sum_n P_n(lambda_l) P_n(lambda_r) over the given spectral indices.

    The expected value is the diagonal matrix of 1/w_l. The length of the
    sum is doubled until the result settles.
    """
    points = [spec.spectral_point(m) for m in indices]
    size = DUAL_START
    previous = None
    while size <= DUAL_MAX:
        vectors = np.array([eigenvector(spec, point, size) for point in points])
        gram = vectors @ vectors.T
        if previous is not None and np.max(np.abs(gram - previous)) <= DUAL_TOL * np.max(np.abs(gram)):
            _LOGGER.debug('%s dual orthogonality settled at %d terms', spec.family_id, size)
            return gram
        previous = gram
        size *= 2
    raise ConvergenceError('{} dual orthogonality did not settle by {} terms'.format(
        spec.family_id, DUAL_MAX), DUAL_MAX)


def _log_factorial(n, factorial):
    if factorial == 'even':
        return gammaln(2.0 * n + 1.0)
    if factorial == 'odd':
        return gammaln(2.0 * n + 2.0)
    if factorial is None:
        return np.zeros_like(n)
    raise ValueError('unknown factorial scaling {!r}'.format(factorial))


def scaled_native(spec, count, x, factorial):
    """Native polynomial values divided by (2n)! ('even') or (2n+1)!
    ('odd') for n = 0 .. count-1. With ``factorial=None`` the native
    values themselves are returned.
    """
    n = np.arange(count, dtype=float)
    if spec.reflected:
        scaled = orthonormal_sequence(spec, -x, count, scale=spec.k)
        sign = np.ones(count)
    else:
        scaled = orthonormal_sequence(spec, x, count, scale=spec.k)
        sign = (-1.0) ** n
    log_ratio = spec.log_norm(n) - n * math.log(spec.k) - _log_factorial(n, factorial)
    return sign * np.exp(log_ratio) * scaled


def _trig(name, x, u):
    if name == 'cos':
        if x >= 0.0:
            return math.cos(math.sqrt(x) * u)
        return math.cosh(math.sqrt(-x) * u)
    if name == 'sin':
        if x >= 0.0:
            return float(sinc_kernel(x, u))
        return math.sinh(math.sqrt(-x) * u) / math.sqrt(-x)
    if name == 'sinh':
        return _trig('sin', -x, u)
    raise ValueError('unknown generating numerator {!r}'.format(name))


def generating_check(spec, x, u, terms):
    """(partial sum, closed form) of the family's generating function.

    The series runs over native polynomials divided by (2n)! or (2n+1)!
    times sn(u)^(2n) or sn(u)^(2n+1), alternating for F3 .. F6.
    """
    gen = spec.entry['generating']
    sn, cn, dn = jacobi_elliptic(u, spec.ctx)
    values = scaled_native(spec, terms, x, gen['parity'])
    n = np.arange(terms)
    powers = 2 * n + (1 if gen['parity'] == 'odd' else 0)
    signs = (-1.0) ** n if gen['alternating'] else np.ones(terms)
    partial = float(np.sum(signs * values * float(sn) ** powers))

    closed = _trig(gen['numerator'], x, u)
    elliptic = {'sn': sn, 'cn': cn, 'dn': dn}
    for name in gen['denominator']:
        closed /= elliptic[name]
    return partial, closed


def asymptotic_leading(spec, n, x):
    """(scaled polynomial value, leading large-n term) at degree ``n``.

    For the reflected families the value is taken at -x, which is where
    the polynomials oscillate.
    """
    if n < 2:
        raise ValueError('asymptotics need n >= 2, got {!r}'.format(n))
    if x < 0.0:
        raise ValueError('asymptotics are stated for x >= 0, got {!r}'.format(x))
    asym = spec.entry['asymptotic']
    x_native = -x if spec.reflected else x
    exact = float(scaled_native(spec, n + 1, x_native, asym['factorial'])[n])

    K = spec.ctx.K
    if asym['trig'] == 'cos':
        trig = math.cos(math.sqrt(x) * K) * x ** (0.5 * asym['root'])
    elif asym['root'] == -1:
        trig = float(sinc_kernel(x, K))
    else:
        trig = math.sin(math.sqrt(x) * K) * x ** (0.5 * asym['root'])
    sign = asym['sign'] * ((-1) ** n if asym['alternating'] else 1)
    kprime2 = (1.0 - spec.k) * (1.0 + spec.k)
    leading = (sign * asym['coef'] * trig * kprime2 ** asym['kprime']
               / (math.sqrt(math.pi) * n ** asym['power']))
    return exact, leading


# family -> (moment, evaluated at k = 0, index shift, factorial, integral)
MOMENT_SUMS = {
    'F1': ('E', True, 0, 'even', 'cn'),
    'F2': ('E', True, 1, 'odd', 'dn_boundary'),
    'F3': ('E', False, 0, 'even', 'cn'),
    'F4': ('F', False, 1, 'odd', 'cn'),
    'F5': ('F', False, 0, 'even', 'dn'),
    'F6': ('E', False, 1, 'odd', 'dn_boundary'),
}


def moment_terms(spec, x, count):
    """The summands of the moment series, n = 0 .. count-1.

    F3 .. F6 alternate in sign; the reflected families are taken at -x.
    Either way the sign inside the scaled polynomial cancels and the
    summands are smooth in n.
    """
    kind, at_zero, shift, factorial, _ = MOMENT_SUMS[spec.family_id]
    moment = moment_E if kind == 'E' else moment_F
    modulus = 0.0 if at_zero else spec.k
    moments = np.array([moment(n + shift, modulus) for n in range(count)])
    if spec.reflected:
        return moments * scaled_native(spec, count, -x, factorial)
    signs = (-1.0) ** np.arange(count)
    return signs * moments * scaled_native(spec, count, x, factorial)


def moment_sum(spec, x, terms=EXTRAPOLATION_START, extrapolate=False):
    """Sum of moment-weighted scaled polynomials.

    The summands decay like n^-2, so the plain partial sum of ``terms``
    entries is only accurate to about 1/terms. With ``extrapolate`` the
    partial sums at 256, 512, ..., 4096 are Richardson extrapolated.
    """
    if not extrapolate:
        return float(np.sum(moment_terms(spec, x, terms)))
    cuts = [EXTRAPOLATION_START * 2 ** j for j in range(EXTRAPOLATION_LEVELS)]
    partial = np.cumsum(moment_terms(spec, x, cuts[-1]))
    estimate, error = richardson([partial[cut - 1] for cut in cuts])
    _LOGGER.debug('%s moment sum at x=%r: %r (extrapolation error %.2g)',
                  spec.family_id, x, estimate, error)
    return estimate


def moment_integral(spec, x):
    """The integral over [0, K] that the moment series sums to."""
    kind = MOMENT_SUMS[spec.family_id][4]
    ctx = spec.ctx
    if kind == 'cn':
        return kernel_integral('cos', 'cn', x, ctx)
    if kind == 'dn':
        return kernel_integral('cos', 'dn', x, ctx)
    boundary = ctx.kprime * float(sinc_kernel(x, ctx.K))
    return (kernel_integral('cos', 'dn', x, ctx) - boundary) / (ctx.k * ctx.k)
