"""Truncated Jacobi and weighted Hankel matrices for the eleven tags.

A weighted Hankel matrix has entries ``H[m, n] = w_m w_n h_(m+n)``. For
every tag the moment sequence h is the square summable solution of the
three-term recurrence with (sigma, xi, eta) = (sigma of the family, a,
b + c + 2), and w is built from the tag's weight parameters (a, b, c).
Such a matrix commutes with the Jacobi matrix of the tag's family.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma, gammaln

from . import catalog
from .carlitz import FamilySpec
from .elliptic import make_context
from .recurrence import RecurrenceParams, omega, solution_plus
from .utils import MODULUS

_LOGGER = logging.getLogger(__name__)


def resolve_tag(tag):
    """Map a command line spelling (``qp``, ``fpp``, ...) to its tag."""
    try:
        return catalog.TAG_ALIASES[tag]
    except KeyError:
        raise ValueError('unknown operator tag {!r}, expected one of {}'.format(
            tag, ', '.join(sorted(catalog.TAG_ALIASES))))


def _check_size(N):
    if N < 2:
        raise ValueError('truncation order must be at least 2, got {!r}'.format(N))


class JacobiOperator(namedtuple('JacobiOperator', 'tag k alpha beta')):
    """Symmetric tridiagonal truncation with diagonal ``beta`` and
    off-diagonal ``alpha``."""
    __slots__ = ()

    @property
    def N(self):
        return len(self.beta)

    def matrix(self):
        return np.diag(self.beta) + np.diag(self.alpha, 1) + np.diag(self.alpha, -1)


class WeightedHankelOperator(namedtuple('WeightedHankelOperator', 'tag k h w')):
    """``h`` holds h_0 .. h_(2N-2) and ``w`` holds w_0 .. w_(N-1)."""
    __slots__ = ()

    @property
    def N(self):
        return len(self.w)

    def matrix(self):
        idx = np.arange(self.N)
        return np.outer(self.w, self.w) * self.h[np.add.outer(idx, idx)]


def jacobi_entries(k, a, b, c, sigma, d, N):
    """(alpha, beta) with beta_n = 4(1+k^2) n (n + sigma) + d and
    alpha_n = -4k sqrt((n+1)(n+a+1)(n+b+1)(n+c+1))."""
    n = np.arange(N, dtype=float)
    beta = 4.0 * (1.0 + k * k) * n * (n + sigma) + d
    m = n[:-1] + 1.0
    alpha = -4.0 * k * np.sqrt(m * (m + a) * (m + b) * (m + c))
    return alpha, beta


def generic_jacobi(k, weight, sigma, d, N, tag=None):
    """Jacobi operator of the general shape for arbitrary (a, b, c)."""
    k = MODULUS.check(k)
    _check_size(N)
    a, b, c = weight
    alpha, beta = jacobi_entries(k, a, b, c, sigma, d, N)
    return JacobiOperator(tag=tag, k=k, alpha=alpha, beta=beta)


def build_jacobi(tag, k, N):
    """The Jacobi matrix of the tag's polynomial family.

    The primed tags share the matrix of their base family.
    """
    tag = resolve_tag(tag)
    _check_size(N)
    spec = FamilySpec(catalog.OPERATORS[tag]['family'], make_context(k))
    alpha, beta = spec.jacobi_entries(N)
    return JacobiOperator(tag=tag, k=spec.k, alpha=alpha, beta=beta)


def weight_sequence(a, b, c, n):
    """sqrt((b+1)_n (c+1)_n / (n! (a+1)_n)), evaluated in log space."""
    for name, value in (('a', a), ('b', b), ('c', c)):
        if value <= -1.0:
            raise ValueError('weight parameter {} must exceed -1, got {!r}'.format(name, value))
    if sorted((b, c)) == sorted((a, 0.0)):
        return np.ones_like(np.asarray(n, dtype=float)) if np.ndim(n) else 1.0
    n = np.asarray(n, dtype=float)
    log_w = 0.5 * (gammaln(n + b + 1.0) - gammaln(b + 1.0)
                   + gammaln(n + c + 1.0) - gammaln(c + 1.0)
                   - gammaln(n + 1.0)
                   - gammaln(n + a + 1.0) + gammaln(a + 1.0))
    value = np.exp(log_w)
    if value.ndim == 0:
        return float(value)
    return value


def tag_params(tag, k):
    """Recurrence parameters of the tag's moment sequence."""
    operator = catalog.OPERATORS[resolve_tag(tag)]
    sigma = FamilySpec(operator['family'], make_context(k)).sigma
    return RecurrenceParams(k=k, sigma=sigma, xi=operator['xi'], eta=operator['eta'])


def moments(tag, k, count, scaled=False):
    """h_0 .. h_(count-1) of the tag; with ``scaled`` without the k^n."""
    params = tag_params(tag, MODULUS.check(k))
    return np.array([solution_plus(params, n, scaled) for n in range(count)])


def build_hankel(tag, k, N):
    tag = resolve_tag(tag)
    k = MODULUS.check(k)
    _check_size(N)
    a, b, c = catalog.OPERATORS[tag]['weight']
    h = moments(tag, k, 2 * N - 1)
    w = weight_sequence(a, b, c, np.arange(N))
    _LOGGER.debug('H(%s) at k=%r, N=%d: h_0=%r, h_(2N-2)=%r', tag, k, N, h[0], h[-1])
    return WeightedHankelOperator(tag=tag, k=k, h=h, w=np.asarray(w, dtype=float))


def general_commuting_moments(a, sigma, k, n):
    """h_n commuting with the Jacobi matrix of polynomial-type alpha,
    i.e. with (xi, eta) = (a, a + 2)."""
    return solution_plus(RecurrenceParams(k=MODULUS.check(k), sigma=sigma, xi=a, eta=a + 2.0), n)


def commuting_moments_integral(a, sigma, k, n):
    """The same moments as :func:`general_commuting_moments` from

        k^n / Gamma(omega) int_0^1 t^(n+a) ((1-t)/(1-k^2 t))^(omega-1) dt

    by quadrature with the algebraic endpoint weight. Needs omega > 0.
    """
    k = MODULUS.check(k)
    w = omega(RecurrenceParams(k=k, sigma=sigma, xi=a, eta=a + 2.0))
    if w <= 0.0:
        raise ValueError('integral form needs omega > 0, got {!r}'.format(w))
    k2 = k * k
    value, error = quad(lambda t: t ** n * (1.0 - k2 * t) ** (1.0 - w), 0.0, 1.0,
                        weight='alg', wvar=(a, w - 1.0), epsabs=0.0, epsrel=1e-13, limit=200)
    _LOGGER.debug('moment integral a=%r sigma=%r n=%d: %r (err %.2g)', a, sigma, n, value, error)
    return k ** n * value / gamma(w)


def commutator_residual(H, J):
    """Largest |HJ - JH| entry away from the last row and column."""
    if H.N != J.N:
        raise ValueError('truncation orders differ: H has {}, J has {}'.format(H.N, J.N))
    if H.N <= 2:
        return 0.0
    hm, jm = H.matrix(), J.matrix()
    commutator = hm @ jm - jm @ hm
    inner = slice(0, H.N - 1)
    return float(np.max(np.abs(commutator[inner, inner])))


def truncation_order(k, tol=1e-18, minimum=64):
    """max(minimum, ceil(log(tol) / log(k)))."""
    return max(minimum, int(math.ceil(math.log(tol) / math.log(k))))
