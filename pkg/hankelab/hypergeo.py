"""Gauss hypergeometric function for real parameters and -1 < z < 1.

The moment sequences of the Hankel matrices are values of 2F1 with
parameters growing linearly in the row index, at z = k^2. The direct
power series handles most of that regime; the Euler and Pfaff
transformations take over where they shorten the series or keep its
terms from alternating.
"""

import logging
import math
from collections import namedtuple

from scipy.special import gammaln, gammasgn, poch

from .utils import ConvergenceError, is_nonpositive_integer

_LOGGER = logging.getLogger(__name__)

SERIES_TOL = 1e-17
SERIES_MAX_TERMS = 20000
# consecutive small terms required before a series is considered summed
SERIES_QUIET_TERMS = 3


class HypergeoArgs(namedtuple('HypergeoArgs', 'a b c z')):
    __slots__ = ()

    def check(self):
        a, b, c, z = self
        for name, value in zip(self._fields, self):
            if math.isnan(value):
                raise ValueError('2F1 parameter %s is NaN' % name)
        if is_nonpositive_integer(c):
            raise ValueError('2F1 is undefined for c = {!r}'.format(c))
        if not -1.0 < z < 1.0:
            raise ValueError('2F1 argument z = {!r} outside (-1, 1)'.format(z))
        return self


def _series(a, b, c, z):
    """Sum the power series directly. Returns (value, terms used)."""
    total = 1.0
    term = 1.0
    quiet = 0
    for j in range(SERIES_MAX_TERMS):
        term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * z
        total += term
        if term == 0.0:
            return total, j + 1
        if abs(term) < SERIES_TOL * abs(total):
            quiet += 1
            if quiet >= SERIES_QUIET_TERMS:
                return total, j + 1
        else:
            quiet = 0
    raise ConvergenceError(
        '2F1({!r}, {!r}; {!r}; {!r}) series did not converge'.format(a, b, c, z),
        SERIES_MAX_TERMS)


def _terminates(*params):
    return any(is_nonpositive_integer(p) for p in params)


def euler_transform(a, b, c, z):
    """2F1(a,b;c;z) through (1-z)^(c-a-b) 2F1(c-a,c-b;c;z)."""
    HypergeoArgs(a, b, c, z).check()
    value, terms = _series(c - a, c - b, c, z)
    return (1.0 - z) ** (c - a - b) * value


def pfaff_transform(a, b, c, z):
    """2F1(a,b;c;z) through (1-z)^(-b) 2F1(c-a,b;c;z/(z-1)).

    For the moment family 2F1(n+alpha, beta; n+gamma; z) the new first
    parameter c - a stays bounded while c grows with n, so the series
    converges in a handful of terms however large n is.
    """
    HypergeoArgs(a, b, c, z).check()
    if z >= 0.5:
        raise ValueError('Pfaff transformation needs z < 1/2, got {!r}'.format(z))
    value, terms = _series(c - a, b, c, z / (z - 1.0))
    return (1.0 - z) ** (-b) * value


def _choose_path(a, b, c, z):
    if z == 0.0:
        return 'trivial'
    if _terminates(a, b):
        return 'direct'
    if z < 0.0:
        return 'pfaff'
    if z > 0.5:
        ca, cb = c - a, c - b
        if _terminates(ca, cb):
            return 'euler'
        if ca >= 0.0 and cb >= 0.0 and abs(ca * cb) < abs(a * b):
            return 'euler'
        return 'direct'
    if z <= 1.0 / 3.0 and abs(c - a) < abs(a):
        return 'pfaff'
    return 'direct'


def gauss_2f1(a, b, c, z):
    """Evaluate 2F1(a, b; c; z) for real parameters and -1 < z < 1."""
    a, b, c, z = HypergeoArgs(float(a), float(b), float(c), float(z)).check()
    path = _choose_path(a, b, c, z)
    if path == 'trivial':
        return 1.0
    if path == 'euler':
        value, terms = _series(c - a, c - b, c, z)
        value *= (1.0 - z) ** (c - a - b)
    elif path == 'pfaff':
        # swap a and b if that makes the transformed series shorter
        if abs((c - b) * a) < abs((c - a) * b):
            a, b = b, a
        value, terms = _series(c - a, b, c, z / (z - 1.0))
        value *= (1.0 - z) ** (-b)
    else:
        value, terms = _series(a, b, c, z)
    _LOGGER.debug('2F1(%r, %r; %r; %r) via %s in %d terms', a, b, c, z, path, terms)
    return value


def gamma_ratio(x, y):
    """Gamma(x)/Gamma(y) through log-gamma differences.

    Returns 0 when y sits on a pole of Gamma; a pole in x is an error.
    """
    if is_nonpositive_integer(y):
        return 0.0
    if is_nonpositive_integer(x):
        raise ValueError('Gamma has a pole at x = {!r}'.format(x))
    sign = gammasgn(x) * gammasgn(y)
    return float(sign * math.exp(gammaln(x) - gammaln(y)))


def pochhammer(x, n):
    """Rising factorial (x)_n."""
    return float(poch(x, n))


def log_pochhammer(x, n):
    """log (x)_n for x > 0."""
    if x <= 0.0:
        raise ValueError('log Pochhammer needs x > 0, got {!r}'.format(x))
    return float(gammaln(x + n) - gammaln(x))


def contiguous_check(a, b, c, z):
    """Largest absolute residual of three contiguous relations.

    The relations link 2F1 at (a-1, b), (a, b), (a+1, b), (a, b+1) and
    (a, b; c+1). Relations with a vanishing denominator (b = 0, z = 0 or
    c = b) are skipped.
    """
    f = lambda a_, b_, c_: gauss_2f1(a_, b_, c_, z)
    f0 = f(a, b, c)
    f_am = f(a - 1.0, b, c)
    f_ap = f(a + 1.0, b, c)

    residuals = [abs((c - a) * f_am + (2.0 * a - c + (b - a) * z) * f0
                     + a * (z - 1.0) * f_ap)]
    if b != 0.0 and z != 0.0:
        rhs = ((a - c) * f_am + (c - a - b) * f0) / (b * (z - 1.0))
        residuals.append(abs(f(a, b + 1.0, c) - rhs))
    if z != 0.0 and c != b:
        rhs = (c * f_am + c * (z - 1.0) * f0) / ((c - b) * z)
        residuals.append(abs(f(a, b, c + 1.0) - rhs))
    return max(residuals)


def quadratic_identity_lhs(a, b, c, z):
    """The bilinear combination of four 2F1 values that collapses to
    (1-c)(1-z)^(c-a-b-1)."""
    if is_nonpositive_integer(2.0 - c):
        raise ValueError('2 - c = {!r} is a non-positive integer'.format(2.0 - c))
    return ((a - c + 1.0) * gauss_2f1(a, b, c, z) * gauss_2f1(a - c + 2.0, b - c + 1.0, 2.0 - c, z)
            - a * gauss_2f1(a + 1.0, b, c, z) * gauss_2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, z))


def quadratic_identity_rhs(a, b, c, z):
    return (1.0 - c) * (1.0 - z) ** (-a - b + c - 1.0)


def quadratic_identity_check(a, b, c, z):
    """Absolute residual of the quadratic 2F1 identity."""
    return abs(quadratic_identity_lhs(a, b, c, z) - quadratic_identity_rhs(a, b, c, z))


def connection_check(a, b, c, z):
    """Relative residual of the connection formula expressing
    2F1(a, b; a+b-c+1; 1-z) through solutions around z = 0. Needs
    0 < z < 1 and all gamma arguments away from poles."""
    if not 0.0 < z < 1.0:
        raise ValueError('connection formula needs 0 < z < 1, got {!r}'.format(z))
    lhs = gauss_2f1(a, b, a + b - c + 1.0, 1.0 - z)
    first = (math.gamma(1.0 + a + b - c) * math.gamma(1.0 - c)
             / (math.gamma(1.0 + a - c) * math.gamma(1.0 + b - c)))
    second = (math.gamma(1.0 + a + b - c) * math.gamma(c - 1.0)
              / (math.gamma(a) * math.gamma(b)))
    rhs = (first * gauss_2f1(a, b, c, z)
           + second * z ** (1.0 - c) * gauss_2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, z))
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def moment_E(n, k):
    """int_0^1 t^(2n) sqrt((1-t^2)/(1-k^2 t^2)) dt."""
    if n < 0:
        raise ValueError('moment index must be non-negative, got {!r}'.format(n))
    log_prefactor = (math.log(math.pi) + gammaln(2 * n + 1) - (2 * n + 2) * math.log(2.0)
                     - gammaln(n + 1) - gammaln(n + 2))
    return math.exp(log_prefactor) * gauss_2f1(n + 0.5, 0.5, n + 2.0, k * k)


def moment_F(n, k):
    """int_0^1 t^(2n) sqrt((1-k^2 t^2)/(1-t^2)) dt."""
    if n < 0:
        raise ValueError('moment index must be non-negative, got {!r}'.format(n))
    log_prefactor = (math.log(math.pi) + gammaln(2 * n + 1) - (2 * n + 1) * math.log(2.0)
                     - 2.0 * gammaln(n + 1))
    return math.exp(log_prefactor) * gauss_2f1(n + 0.5, -0.5, n + 1.0, k * k)


def moment_asymptotic(n, k, kind):
    """Leading large-n behaviour of the moments.

    E_n ~ sqrt(pi/(1-k^2)) / (4 n^(3/2)) and F_n ~ sqrt((1-k^2) pi) / (2 sqrt(n)).
    """
    kprime2 = (1.0 - k) * (1.0 + k)
    if kind == 'E':
        return math.sqrt(math.pi / kprime2) / (4.0 * n ** 1.5)
    if kind == 'F':
        return math.sqrt(kprime2 * math.pi) / (2.0 * math.sqrt(n))
    raise ValueError('unknown moment kind {!r}'.format(kind))
