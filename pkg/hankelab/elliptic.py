"""Complete elliptic integrals, the nome and the Jacobian elliptic
functions for a real modulus 0 < k < 1.

Everything is evaluated through the arithmetic-geometric mean. The Fourier
expansions in the nome q are kept next to it as an independent way of
getting the same values; they converge geometrically in q and are what the
closed-form spectra are built on.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.integrate import quad

from .utils import MODULUS, ConvergenceError

_LOGGER = logging.getLogger(__name__)

EPS = np.finfo(float).eps
AGM_MAX_STEPS = 64
FOURIER_TOL = 1e-15
FOURIER_MAX_TERMS = 512


def agm(a, b):
    """Arithmetic-geometric mean of two positive numbers."""
    for step in range(AGM_MAX_STEPS):
        if abs(a - b) <= EPS * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError('AGM(%r, %r) did not converge' % (a, b), AGM_MAX_STEPS)


def _agm_sequence(k):
    """Return the sequences a_n, c_n of the AGM started at (1, k')."""
    a, b, c = 1.0, _complement(k), k
    a_seq, c_seq = [a], [c]
    for step in range(AGM_MAX_STEPS):
        if abs(c) <= EPS * a:
            return a_seq, c_seq
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    raise ConvergenceError('Landen descent for k=%r did not converge' % k, AGM_MAX_STEPS)


def _complement(k):
    # sqrt(1 - k^2) without losing digits when k is close to 1
    return math.sqrt((1.0 - k) * (1.0 + k))


class EllipticContext(namedtuple('EllipticContext', 'k K Kprime Eint q')):
    """The modulus together with the constants derived from it.

    Build one with :func:`make_context`; instances are immutable and can
    be shared freely.
    """
    __slots__ = ()

    @property
    def kprime(self):
        return _complement(self.k)

    def nome_term(self, formula, m, lattice):
        """Evaluate one of the closed-form constants of the catalog at index m.

        The formula is a dict with keys ``coef, pi, k, K, index, nome, sign,
        damping`` and an optional ``zero_scale`` that multiplies the m = 0
        term alone. The lattice decides how m enters: on the 'odd' lattice
        j = m + 1/2 and idx = 2m + 1, on the 'even' lattice j = m and
        idx = m. The result is::

            coef pi^pi k^k K^K idx^index q^(nome j) (1 + sign q^(2j))^damping
        """
        if lattice == 'odd':
            j, idx = m + 0.5, 2 * m + 1
        else:
            j, idx = float(m), m
        q2j = self.q ** (2 * j)
        value = (formula['coef']
                 * math.pi ** formula['pi']
                 * self.k ** formula['k']
                 * self.K ** formula['K']
                 * float(idx) ** formula['index']
                 * self.q ** (formula['nome'] * j)
                 * (1.0 + formula['sign'] * q2j) ** formula['damping'])
        if m == 0:
            value *= formula.get('zero_scale', 1.0)
        return value


def make_context(k):
    """Compute K, K', E and q for the modulus ``k``."""
    k = MODULUS.check(k)

    a_seq, c_seq = _agm_sequence(k)
    K = math.pi / (2.0 * a_seq[-1])
    # E/K = 1 - sum 2^(n-1) c_n^2 with c_0 = k
    correction = math.fsum(2.0 ** (n - 1) * c * c for n, c in enumerate(c_seq))
    Eint = K * (1.0 - correction)

    Kprime = math.pi / (2.0 * agm(1.0, k))
    q = math.exp(-math.pi * Kprime / K)
    _LOGGER.debug('k=%r: K=%r Kprime=%r E=%r q=%r (%d Landen steps)',
                  k, K, Kprime, Eint, q, len(a_seq) - 1)
    return EllipticContext(k=k, K=K, Kprime=Kprime, Eint=Eint, q=q)


def jacobi_elliptic(u, ctx):
    """Return (sn, cn, dn) at ``u`` by descending Landen transformation.

    ``u`` may be a scalar or a numpy array; the result matches its shape.
    """
    u_arr = np.asarray(u, dtype=float)
    a_seq, c_seq = _agm_sequence(ctx.k)
    steps = len(a_seq) - 1

    phi = (2.0 ** steps) * a_seq[-1] * u_arr
    for n in range(steps, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c_seq[n] / a_seq[n] * np.sin(phi)))

    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = np.sqrt(1.0 - ctx.k * ctx.k * sn * sn)
    if np.ndim(u) == 0:
        return float(sn), float(cn), float(dn)
    return sn, cn, dn


def default_terms(ctx, tol=FOURIER_TOL):
    """Smallest term count with q^n/(1 - q) below ``tol``, capped."""
    q = ctx.q
    if q <= 0.0:
        return 1
    terms = int(math.ceil(math.log(tol * (1.0 - q)) / math.log(q)))
    return max(1, min(terms, FOURIER_MAX_TERMS))


def tail_bound(ctx, terms):
    return ctx.q ** terms / (1.0 - ctx.q)


def _sn_series(v, ctx, terms):
    n = np.arange(terms)
    coef = ctx.q ** (n + 0.5) / (1.0 - ctx.q ** (2 * n + 1))
    return 2.0 * math.pi / (ctx.k * ctx.K) * np.sin(np.multiply.outer(v, 2 * n + 1)) @ coef


def _cn_series(v, ctx, terms):
    n = np.arange(terms)
    coef = ctx.q ** (n + 0.5) / (1.0 + ctx.q ** (2 * n + 1))
    return 2.0 * math.pi / (ctx.k * ctx.K) * np.cos(np.multiply.outer(v, 2 * n + 1)) @ coef


def _dn_series(v, ctx, terms):
    n = np.arange(1, terms + 1)
    coef = ctx.q ** n / (1.0 + ctx.q ** (2 * n))
    return (math.pi / (2.0 * ctx.K)
            + 2.0 * math.pi / ctx.K * np.cos(np.multiply.outer(v, n)) @ coef)


def _sn2_series(v, ctx, terms):
    k2 = ctx.k * ctx.k
    n = np.arange(1, terms + 1)
    coef = n * ctx.q ** n / (1.0 - ctx.q ** (2 * n))
    constant = (ctx.K - ctx.Eint) / (k2 * ctx.K)
    return (constant - 2.0 * math.pi ** 2 / (k2 * ctx.K ** 2)
            * np.cos(np.multiply.outer(v, n)) @ coef)


def _sn3_series(v, ctx, terms):
    k2 = ctx.k * ctx.k
    n = np.arange(terms)
    odd = 2 * n + 1
    coef = (ctx.q ** (n + 0.5) / (1.0 - ctx.q ** odd)
            * (1.0 + k2 - odd ** 2 * math.pi ** 2 / (4.0 * ctx.K ** 2)))
    return math.pi / (ctx.k ** 3 * ctx.K) * np.sin(np.multiply.outer(v, odd)) @ coef


FOURIER_SERIES = {
    'sn': _sn_series,
    'cn': _cn_series,
    'dn': _dn_series,
    'sn2': _sn2_series,
    'sn3': _sn3_series,
}

# Argument u of the elliptic function that the series value at v belongs to.
FOURIER_ARGUMENT = {
    'sn': lambda v, ctx: 2.0 * ctx.K * v / math.pi,
    'cn': lambda v, ctx: 2.0 * ctx.K * v / math.pi,
    'sn3': lambda v, ctx: 2.0 * ctx.K * v / math.pi,
    'dn': lambda v, ctx: ctx.K * v / math.pi,
    'sn2': lambda v, ctx: ctx.K * v / math.pi,
}


def fourier_eval(series_id, v, ctx, terms=None, tol=FOURIER_TOL):
    """Partial sum of the Fourier series ``series_id`` at ``v``.

    The argument conventions are those of the expansions themselves: ``sn``,
    ``cn`` and ``sn3`` are expanded in v with u = 2Kv/pi, ``dn`` and ``sn2``
    with u = Kv/pi (see ``FOURIER_ARGUMENT``). A warning is logged when
    the tail bound q^terms/(1 - q) exceeds ``tol``; the partial sum is
    returned regardless.
    """
    try:
        series = FOURIER_SERIES[series_id]
    except KeyError:
        raise ValueError('unknown Fourier series {!r}, expected one of {}'.format(
            series_id, ', '.join(sorted(FOURIER_SERIES))))
    if terms is None:
        terms = default_terms(ctx, tol)
    if terms < 1:
        raise ValueError('terms must be at least 1, got {!r}'.format(terms))

    bound = tail_bound(ctx, terms)
    if bound > tol:
        _LOGGER.warning('%s series with %d terms at k=%r: tail bound %.3g exceeds %.3g',
                        series_id, terms, ctx.k, bound, tol)

    value = series(np.asarray(v, dtype=float), ctx, terms)
    if np.ndim(v) == 0:
        return float(value)
    return value


def sinc_kernel(x, u):
    """sin(sqrt(x) u) / sqrt(x), equal to u at x = 0."""
    if x < 0.0:
        raise ValueError('expected x >= 0, got {!r}'.format(x))
    u = np.asarray(u, dtype=float)
    return u * np.sinc(math.sqrt(x) * u / math.pi)


KERNEL_WEIGHTS = {
    'cn': lambda sn, cn, dn, k: cn,
    'dn': lambda sn, cn, dn, k: dn,
    'sn': lambda sn, cn, dn, k: sn,
    'sn2': lambda sn, cn, dn, k: sn * sn,
    'sn_cubic': lambda sn, cn, dn, k: (1.0 + k * k) * sn - 2.0 * k * k * sn ** 3,
}

QUAD_EPSABS = 1e-14
QUAD_EPSREL = 1e-13
QUAD_LIMIT = 200
# accepted absolute error when quad reports a roundoff problem
QUAD_ACCEPT = 1e-10


def kernel_integral(trig, weight, x, ctx):
    """int_0^K t(sqrt(x) u) w(u) du by adaptive quadrature.

    ``trig`` is 'cos' for cos(sqrt(x) u) or 'sinc' for sin(sqrt(x) u)/sqrt(x);
    ``weight`` names one of ``KERNEL_WEIGHTS``.
    """
    if x < 0.0:
        raise ValueError('expected x >= 0, got {!r}'.format(x))
    try:
        w = KERNEL_WEIGHTS[weight]
    except KeyError:
        raise ValueError('unknown kernel weight {!r}'.format(weight))
    root = math.sqrt(x)
    if trig == 'cos':
        t = lambda u: math.cos(root * u)
    elif trig == 'sinc':
        t = lambda u: float(sinc_kernel(x, u))
    else:
        raise ValueError('unknown kernel {!r}'.format(trig))

    def integrand(u):
        sn, cn, dn = jacobi_elliptic(u, ctx)
        return t(u) * w(sn, cn, dn, ctx.k)

    result = quad(integrand, 0.0, ctx.K, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL,
                  limit=QUAD_LIMIT, full_output=1)
    value, error = result[0], result[1]
    if len(result) > 3 and error > QUAD_ACCEPT:
        raise ConvergenceError('quadrature of %s*%s at x=%r: %s' % (trig, weight, x, result[3]),
                               result[2].get('last'))
    _LOGGER.debug('int %s*%s at x=%r, k=%r: %r (err %.2g, %d evaluations)',
                  trig, weight, x, ctx.k, value, error, result[2]['neval'])
    return value
